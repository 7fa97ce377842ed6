import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.fiber_full.cohomology.local import local_cohomology_table
from src.fiber_full.cohomology.sheaf import sheaf_cohomology_table
from src.fiber_full.degeneration.conca_varbaro import degeneration_fibers, verify_conca_varbaro
from src.fiber_full.degeneration.family import FamilyIdeal, homogenize_ideal, specialize
from src.fiber_full.degeneration.fiberfull import fiber_full_family_check
from src.fiber_full.degeneration.fitting import fitting_stratify
from src.fiber_full.degeneration.weights import realize_weight
from src.fiber_full.errors import InputError, InvariantViolation
from src.fiber_full.groebner.ideal import initial_ideal
from src.fiber_full.groebner.monomial import MonomialIdeal
from src.fiber_full.hilbert.series import hilbert_series
from src.fiber_full.poly.orders import MonomialOrder
from src.fiber_full.reports.ideal_file import IdealFile, read_ideal_file
from src.fiber_full.reports.polyformat import format_poly, format_polys
from src.fiber_full.resolution.schreyer import free_resolution
from src.fiber_full.settings import DEFAULT_ORDER, DEFAULT_Q_MAX, WINDOW_EXTRA
from src.fiber_full.strata.classify import depth_report, first_divergence, group_by_stratum, same_stratum
from src.fiber_full.strata.lex import lex_cohomology_closed_form, lex_ideal, lex_table, parse_partition

Window = Optional[Tuple[int, int]]

LEX_MODES = ("closed-form", "engine", "both")


class FiberFullEngine:
    """
    Coordinator for the fibfull commands.

    Each command method loads its inputs, calls into the library and returns a plain dict with a
    JSON-ready ``report`` and a human-readable ``text``.
    """

    def __init__(self, field: Optional[str] = None, order: Optional[str] = None,
                 logger: Optional[logging.Logger] = None):
        """
        Args:
            field: Field requested on the command line (``Q`` or ``F:p``)
            order: Monomial order overriding the file headers
        """
        self.field = field
        self.order = MonomialOrder.parse(order) if order else None
        self.logger = logger or logging.getLogger(__name__)

    def load(self, path: str) -> IdealFile:
        self.logger.info(f"Reading {path}")
        return read_ideal_file(path, self.field)

    def load_ideal(self, path: str):
        parsed = self.load(path)
        if parsed.is_family:
            raise InputError(f"{path}: expected an ideal over a field, got a family file (it mentions t).")
        return parsed

    def order_for(self, parsed: IdealFile) -> MonomialOrder:
        return self.order or parsed.order or MonomialOrder.parse(DEFAULT_ORDER)

    def load_family(self, path: str, homogenize: bool = False) -> FamilyIdeal:
        """A family file as is, or hom_ω(I) of an ideal file when ``homogenize`` is set."""
        parsed = self.load(path)
        if parsed.is_family:
            return FamilyIdeal.from_ideal(parsed.ideal)
        if not homogenize:
            raise InputError(f"{path}: expected a family file; pass --homogenize to degenerate an ideal file.")
        order = self.order_for(parsed)
        return homogenize_ideal(parsed.ideal, realize_weight(parsed.ideal, order, self.logger), order)

    def table(self, path: str, window: Window = None) -> Dict[str, Any]:
        parsed = self.load_ideal(path)
        signature = sheaf_cohomology_table(parsed.ideal, window, self.logger)
        return {"report": signature.to_json(), "text": signature.to_text()}

    def classify(self, path: str) -> Dict[str, Any]:
        parsed = self.load_ideal(path)
        report = depth_report(parsed.ideal)
        acm = report.acm_by_resolution
        ag = acm and report.cm_type == 1
        result = {
            "acm": acm,
            "ag": ag,
            "dimension": report.dimension,
            "codimension": report.codimension,
            "projective_dimension": report.projective_dimension,
            "cm_type": report.cm_type,
        }
        text = "\n".join(f"{key}: {str(value).lower()}" for key, value in result.items())
        return {"report": result, "text": text}

    def acm(self, path: str) -> Dict[str, Any]:
        result = self.classify(path)
        result["text"] = f"ACM: {str(result['report']['acm']).lower()}"
        return result

    def ag(self, path: str) -> Dict[str, Any]:
        result = self.classify(path)
        result["text"] = f"AG: {str(result['report']['ag']).lower()}"
        return result

    def compare(self, paths: Sequence[str], window: Window = None) -> Dict[str, Any]:
        """Two files: same stratum or the first divergence. More files: equivalence classes."""
        if len(paths) < 2:
            raise InputError("compare needs at least two files.")
        signatures = {}
        for path in tqdm(paths, desc="Signatures", unit="file", disable=None, leave=False):
            signatures[path] = sheaf_cohomology_table(self.load_ideal(path).ideal, window, self.logger)
        if len(paths) == 2:
            first, second = (signatures[p] for p in paths)
            same = same_stratum(first, second)
            divergence = None if same else first_divergence(first, second)
            report: Dict[str, Any] = {"same_stratum": same}
            if divergence is not None:
                report["first_divergence"] = {"i": divergence[0], "nu": divergence[1]}
            if same:
                text = "SAME STRATUM"
            elif divergence is None:
                text = "DIFFERENT (tails or Hilbert polynomials differ)"
            else:
                text = f"DIFFERENT (first divergence: i={divergence[0]}, nu={divergence[1]})"
            return {"report": report, "text": text}
        classes = group_by_stratum(signatures)
        text = "\n".join(f"stratum {k + 1}: {', '.join(members)}" for k, members in enumerate(classes))
        return {"report": {"strata": classes}, "text": text}

    def lex(self, partition: str, r: int, mode: str = "both", window: Window = None) -> Dict[str, Any]:
        """Closed-form and/or engine table of L(λ); ``both`` asserts they agree."""
        if mode not in LEX_MODES:
            raise InputError(f"Unknown lex mode '{mode}'. Use one of {', '.join(LEX_MODES)}.")
        lam = parse_partition(partition)
        data = lex_ideal(lam, r)
        window = window or (-(r + 3), r + 3)
        report: Dict[str, Any] = {
            "partition": list(lam.parts),
            "r": r,
            "ideal": format_polys(data.monomials.to_polys(data.ideal().ring)),
            "window": list(window),
        }
        closed = lex_table(lam, r, window) if mode in ("closed-form", "both") else None
        engine = None
        if mode in ("engine", "both"):
            signature = sheaf_cohomology_table(data.ideal(), window, self.logger)
            engine = signature.h
            report["P_h"] = str(signature.hilbert_polynomial)
        if closed is not None:
            report["closed_form"] = closed
        if engine is not None:
            report["engine"] = engine
        if closed is not None and engine is not None:
            if closed != engine:
                lo = window[0]
                bad = next((i, lo + k) for i in range(r + 1) for k in range(len(closed[i]))
                           if closed[i][k] != engine[i][k])
                raise InvariantViolation(
                    f"Closed form for L({lam}) disagrees with the engine at (i, nu) = {bad}: "
                    f"{lex_cohomology_closed_form(lam, r, bad[1])[bad[0]]} vs {engine[bad[0]][bad[1] - lo]}"
                )
            report["agree"] = True
        text = [str(data), f"window [{window[0]}, {window[1]}]"]
        for label in ("closed_form", "engine"):
            if label in report:
                text.append(label)
                text.extend(f"  h_{i}: {row}" for i, row in enumerate(report[label]))
        return {"report": report, "text": "\n".join(text)}

    def degenerate(self, path: str, fibers: Optional[List[int]] = None, check_squarefree: bool = False,
                   window: Window = None) -> Dict[str, Any]:
        """
        Weight vector, hom_ω(I), round-trip checks on the fibers at t = 0 and t = 1, and optionally
        the local cohomology comparison and the signatures of further fibers.
        """
        parsed = self.load_ideal(path)
        ideal = parsed.ideal
        order = self.order_for(parsed)
        omega = realize_weight(ideal, order, self.logger)
        family = homogenize_ideal(ideal, omega, order)
        initial = initial_ideal(ideal, order)
        special = specialize(family, 0)
        if MonomialIdeal.from_polys(special.generators, ideal.nvars) != initial:
            raise InvariantViolation(f"Fiber at t = 0 differs from in_{order}(I) = {initial}.")
        if not specialize(family, 1).same_ideal(ideal):
            raise InvariantViolation("Fiber at t = 1 differs from I.")
        report: Dict[str, Any] = {
            "order": str(order),
            "omega": list(omega.values),
            "family": [format_poly(g) for g in family.generators],
            "initial_ideal": format_polys(initial.to_polys(ideal.ring)),
            "squarefree": initial.is_squarefree(),
        }
        lines = [f"order: {order}", f"omega: ({omega})", f"family: {family}",
                 f"initial ideal: {initial}", f"squarefree: {str(initial.is_squarefree()).lower()}"]
        degeneration = None
        if check_squarefree:
            degeneration = verify_conca_varbaro(ideal, order, window, self.logger)
            comparison = degeneration.to_json()
            report["equal"] = degeneration.signatures_equal
            report["tables"] = comparison["tables"]
            if "sheaf_equal" in comparison:
                report["sheaf_equal"] = comparison["sheaf_equal"]
            lines.append(f"equal: {str(degeneration.signatures_equal).lower()}")
            lines.append(f"H(S/I):\n{degeneration.original.to_dataframe().to_string()}")
            lines.append(f"H(S/in):\n{degeneration.degenerate.to_dataframe().to_string()}")
        if fibers:
            signatures = degeneration_fibers(ideal, order, fibers, degeneration, self.logger)
            together = all(same_stratum(signatures[fibers[0]], s) for s in signatures.values())
            report["fibers"] = {str(alpha): s.to_json() for alpha, s in signatures.items()}
            report["fibers_same_stratum"] = together
            lines.append(f"fibers {fibers} in one stratum: {str(together).lower()}")
        return {"report": report, "text": "\n".join(lines)}

    def stratify(self, path: str, window: Window = None, homogenize: bool = False) -> Dict[str, Any]:
        family = self.load_family(path, homogenize)
        report = fitting_stratify(family, window, self.logger)
        return {"report": report.to_json(), "text": report.to_dataframe().to_string()}

    def fiberfull_check(self, path: str, q_max: int = DEFAULT_Q_MAX, window: Window = None,
                        homogenize: bool = False) -> Dict[str, Any]:
        family = self.load_family(path, homogenize)
        report = fiber_full_family_check(family, q_max, window, self.logger)
        lines = [f"flat: {str(report.flat).lower()}"]
        lines.extend(f"q = {q}: {str(v).lower()}" for q, v in sorted(report.verdicts.items()))
        if report.flat:
            lines.append(f"locally free over k[t]_(t): {str(report.local_free).lower()}")
        return {"report": report.to_json(), "text": "\n".join(lines)}

    def betti(self, path: str) -> Dict[str, Any]:
        parsed = self.load_ideal(path)
        table = free_resolution(parsed.ideal, logger=self.logger).betti_table()
        report = table.to_json()
        report["regularity"] = table.regularity()
        report["projective_dimension"] = table.projective_dimension()
        return {"report": report, "text": table.to_text()}

    def localcoh(self, path: str, window: Window = None) -> Dict[str, Any]:
        """Local cohomology of S/I without saturating, next to the raw Hilbert function."""
        parsed = self.load_ideal(path)
        ideal = parsed.ideal
        resolution = free_resolution(ideal, logger=self.logger)
        if window is None:
            base = resolution.betti_table().regularity() + ideal.nvars + WINDOW_EXTRA
            window = (-base, base)
        table = local_cohomology_table(ideal, window, resolution, logger=self.logger)
        raw = hilbert_series(ideal)
        report = table.to_json()
        report["raw_hilbert"] = [raw.value(nu) for nu in range(window[0], window[1] + 1)]
        frame = table.to_dataframe()
        frame.loc["HF(S/I)"] = report["raw_hilbert"]
        return {"report": report, "text": frame.to_string()}
