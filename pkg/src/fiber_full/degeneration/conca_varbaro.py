"""
Square-free Gröbner degenerations preserve local cohomology.

When in_>(I) is square-free, dim H^j_m(S/I)_ν = dim H^j_m(S/in_>(I))_ν for all j and ν. The check
compares both local cohomology tables on a window and their Ext Hilbert series everywhere. A
mismatch on a square-free instance raises TheoremFalsification.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..cohomology.local import LocalCohTable, local_cohomology_table
from ..cohomology.sheaf import CohomologySignature, sheaf_cohomology_table
from ..errors import InputError, TheoremFalsification
from ..groebner.ideal import Ideal, initial_ideal, monomial_ideal_to_ideal, saturate_irrelevant
from ..groebner.monomial import MonomialIdeal
from ..poly.orders import MonomialOrder
from ..reports.polyformat import format_polys
from ..resolution.schreyer import free_resolution
from ..settings import WINDOW_EXTRA
from ..strata.classify import same_stratum
from .family import homogenize_ideal, specialize
from .weights import realize_weight

logger = logging.getLogger(__name__)


@dataclass
class DegenerationReport:
    """Local cohomology of S/I next to that of S/in_>(I)."""

    order: MonomialOrder
    initial: MonomialIdeal
    squarefree: bool
    window: Tuple[int, int]
    original: LocalCohTable
    degenerate: LocalCohTable
    mismatches: List[Tuple[int, Optional[int]]] = field(default_factory=list)
    sheaf_equal: Optional[bool] = None
    fibers: Dict[Any, CohomologySignature] = field(default_factory=dict)
    fibers_same_stratum: Optional[bool] = None
    original_ring: Any = None

    @property
    def signatures_equal(self) -> bool:
        return not self.mismatches

    def to_json(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "order": str(self.order),
            "initial_ideal": format_polys(self.initial.to_polys(self.original_ring)),
            "squarefree": self.squarefree,
            "signatures_equal": self.signatures_equal,
            "window": list(self.window),
            "tables": {"ideal": self.original.to_json(), "initial": self.degenerate.to_json()},
        }
        if self.mismatches:
            report["mismatches"] = [{"j": j, "nu": nu} for j, nu in self.mismatches]
        if self.sheaf_equal is not None:
            report["sheaf_equal"] = self.sheaf_equal
        if self.fibers:
            report["fibers"] = {str(alpha): s.to_json() for alpha, s in self.fibers.items()}
            report["fibers_same_stratum"] = self.fibers_same_stratum
        return report


def _is_saturated(ideal: Ideal) -> bool:
    return saturate_irrelevant(ideal).same_ideal(ideal)


def _default_window(initial: Ideal) -> Tuple[int, int]:
    """reg(in) bounds reg(I) from above, so its window serves both tables."""
    base = free_resolution(initial).betti_table().regularity() + initial.nvars + WINDOW_EXTRA
    return -base, base


def table_mismatches(first: LocalCohTable, second: LocalCohTable) -> List[Tuple[int, Optional[int]]]:
    """(j, ν) pairs on the window where the tables differ, plus (j, None) for differing series."""
    lo, hi = first.window
    mismatches = []
    for j in range(first.n + 1):
        for k, nu in enumerate(range(lo, hi + 1)):
            if first.dims[j][k] != second.dims[j][k]:
                mismatches.append((j, nu))
    for k, series in first.ext.series.items():
        if series != second.ext.series.get(k):
            mismatches.append((first.n - k, None))
    return mismatches


def verify_conca_varbaro(ideal: Ideal, order: MonomialOrder, window: Optional[Tuple[int, int]] = None,
                         logger: Optional[logging.Logger] = None) -> DegenerationReport:
    """
    Compare the local cohomology of S/I and S/in_>(I).

    Args:
        ideal: Homogeneous ideal over a field (not saturated)
        order: Order defining the initial ideal
        window: Degrees ν to tabulate (sized from reg(in_>(I)) if omitted)

    Returns:
        DegenerationReport with both tables

    Raises:
        TheoremFalsification: if in_>(I) is square-free and the tables differ
    """
    logger = logger or logging.getLogger(__name__)
    if ideal.has_parameter:
        raise InputError("Degenerations start from an ideal over a field, not a family.")
    if not ideal.homogeneous:
        raise InputError("Degenerations need a homogeneous ideal.")
    initial = initial_ideal(ideal, order)
    degenerate_ideal = monomial_ideal_to_ideal(initial, ideal.ring)
    window = window or _default_window(degenerate_ideal)
    squarefree = initial.is_squarefree()
    logger.info(f"in_{order}(I) = {initial} (square-free: {squarefree})")

    original = local_cohomology_table(ideal, window, logger=logger)
    degenerate = local_cohomology_table(degenerate_ideal, window, logger=logger)
    report = DegenerationReport(order, initial, squarefree, window, original, degenerate,
                                table_mismatches(original, degenerate), original_ring=ideal.ring)

    if _is_saturated(ideal) and _is_saturated(degenerate_ideal):
        report.sheaf_equal = same_stratum(sheaf_cohomology_table(ideal, window),
                                          sheaf_cohomology_table(degenerate_ideal, window))

    if squarefree and not report.signatures_equal:
        raise TheoremFalsification(
            f"Square-free initial ideal {initial} but local cohomology differs at {report.mismatches[:5]}"
        )
    logger.info(f"Local cohomology of S/I and S/in agree: {report.signatures_equal}")
    return report


def degeneration_fibers(ideal: Ideal, order: MonomialOrder, alphas: Sequence[int],
                        report: Optional[DegenerationReport] = None,
                        logger: Optional[logging.Logger] = None) -> Dict[int, CohomologySignature]:
    """
    Signatures of the fibers Z_α of hom_ω(I) for ω realising the order.

    When ``report`` says the initial ideal is square-free, all fibers must share one stratum.
    """
    logger = logger or logging.getLogger(__name__)
    family = homogenize_ideal(ideal, realize_weight(ideal, order, logger), order)
    fibers = {}
    for alpha in tqdm(alphas, desc="Fibers", unit="fiber", disable=None, leave=False):
        fibers[alpha] = sheaf_cohomology_table(specialize(family, alpha))
    signatures = list(fibers.values())
    together = all(same_stratum(signatures[0], s) for s in signatures[1:])
    if report is not None:
        report.fibers = fibers
        report.fibers_same_stratum = together
        if report.squarefree and not together:
            raise TheoremFalsification(f"Fibers {list(alphas)} of a square-free degeneration lie in different strata.")
    logger.info(f"Fibers {list(alphas)} share one stratum: {together}")
    return fibers
