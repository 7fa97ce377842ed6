import argparse
from typing import List, Optional, Sequence

from src.fiber_full.settings import DEFAULT_Q_MAX

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def parse_int_list(text: str) -> List[int]:
    """Parse ``0,1,2`` into [0, 1, 2]."""
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got '{text}'") from e


def _common_options() -> argparse.ArgumentParser:
    """Options accepted by every command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        help="Print the machine-readable JSON report instead of text"
    )
    common.add_argument(
        "--out",
        default=None,
        help="Write the report to this path instead of stdout"
    )
    common.add_argument(
        "--window",
        nargs=2,
        type=int,
        metavar=("NU_MIN", "NU_MAX"),
        default=None,
        help="Degree window (the default window is sized from the regularity)"
    )
    common.add_argument(
        "--order",
        default=None,
        help="Monomial order: lex, grevlex or weight:w0,..,wN (overrides the file header)"
    )
    common.add_argument(
        "--field",
        default=None,
        help="Coefficient field: Q or F:p (must agree with the file header)"
    )
    common.add_argument(
        "--q",
        type=int,
        default=DEFAULT_Q_MAX,
        help="Largest truncation order k[t]/(t^q) for the fiber-full check"
    )
    common.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="INFO",
        help="Logging level"
    )
    common.add_argument(
        "--quiet",
        action="store_true",
        help="Only log warnings and errors"
    )
    return common


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments with descriptions."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="fibfull",
        description="Fiber-full cohomology signatures of projective subschemes",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(
            name,
            parents=[common],
            help=help_text,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )

    for name, help_text in (
        ("table", "Cohomology signature h_0..h_r of V(I)"),
        ("acm", "Is V(I) arithmetically Cohen-Macaulay"),
        ("ag", "Is V(I) arithmetically Gorenstein"),
        ("betti", "Minimal graded Betti table of S/I"),
        ("localcoh", "Local cohomology table of S/I (not saturated)"),
    ):
        command(name, help_text).add_argument("file", help="Ideal file")

    compare = command("compare", "Compare signatures; with more than two files, group them by stratum")
    compare.add_argument("files", nargs="+", help="Ideal files")

    lex = command("lex", "Cohomology of the saturated lex ideal L(λ)")
    lex.add_argument(
        "--partition",
        required=True,
        help="Partition λ, e.g. 2,1"
    )
    lex.add_argument(
        "--r",
        type=int,
        required=True,
        help="Dimension of the ambient projective space"
    )
    mode = lex.add_mutually_exclusive_group()
    mode.add_argument("--closed-form", dest="mode", action="store_const", const="closed-form",
                      help="Only the closed-form table")
    mode.add_argument("--engine", dest="mode", action="store_const", const="engine",
                      help="Only the engine table")
    mode.add_argument("--both", dest="mode", action="store_const", const="both",
                      help="Both tables, asserted equal")
    lex.set_defaults(mode="both")

    degenerate = command("degenerate", "Gröbner degeneration of I to in_>(I)")
    degenerate.add_argument("file", help="Ideal file")
    degenerate.add_argument(
        "--fibers",
        type=parse_int_list,
        default=None,
        help="Comma-separated fibers t = α whose signatures are computed"
    )
    degenerate.add_argument(
        "--check-squarefree",
        action="store_true",
        help="Compare the local cohomology of S/I and S/in_>(I)"
    )

    for name, help_text in (
        ("stratify", "Fitting stratification of the t-line"),
        ("fiberfull-check", "Freeness of the dual resolution strands over k[t]/(t^q)"),
    ):
        family = command(name, help_text)
        family.add_argument("file", help="Family file (or an ideal file with --homogenize)")
        family.add_argument(
            "--homogenize",
            action="store_true",
            help="Treat an ideal file as hom_ω(I) for the chosen order"
        )

    return parser.parse_args(argv)
