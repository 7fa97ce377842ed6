"""
Fiber-full check of a one-parameter family over the local ring k[t]_(t).

The family R/F is resolved over k[x, t]; the dual strands Hom(F_., R)_μ are complexes of free
k[t]-modules. For B = k[t]/(t^q), H = H^k(K_μ ⊗ B) is B-free iff

    dim_k H = q * dim_k H/tH,      dim_k H/tH = dim ker - dim(im + t ker),

with kernels and spans from Howell forms. Independently, the Smith forms of the strand
differentials give the least q at which some H stops being free.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from ..core.howell import TruncatedRing, left_kernel, span_dimension, times_t, truncate_matrix
from ..core.matrices import ExactMatrix
from ..core.smith import smith_normal_form
from ..core.unipoly import valuation
from ..errors import InputError, InvariantViolation
from ..groebner.ideal import Ideal
from ..resolution.complexes import DualComplex
from ..resolution.schreyer import free_resolution
from ..settings import DEFAULT_Q_MAX, WINDOW_EXTRA
from .family import FamilyIdeal, family_is_flat, specialize

logger = logging.getLogger(__name__)


@dataclass
class FiberFullReport:
    """Per-q verdicts of the freeness check on a window of degrees ν."""

    flat: bool
    window: Tuple[int, int]
    q_max: int
    verdicts: Dict[int, bool] = field(default_factory=dict)
    local_free: Optional[bool] = None
    first_failing_q: Optional[int] = None
    failures: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def fiber_full(self) -> bool:
        return self.flat and all(self.verdicts.values())

    def to_json(self) -> Dict[str, Any]:
        return {
            "flat": self.flat,
            "window": list(self.window),
            "q_max": self.q_max,
            "verdicts": {str(q): v for q, v in sorted(self.verdicts.items())},
            "fiber_full": self.fiber_full,
            "local_free": self.local_free,
            "first_failing_q": self.first_failing_q,
            "failures": [{"q": q, "i": i, "nu": nu} for q, i, nu in self.failures],
        }


def default_window(family: FamilyIdeal) -> Tuple[int, int]:
    """[-(reg + n + 2), reg + n + 2] with reg the larger regularity of the fibers at t = 0 and 1."""
    reg = 0
    for alpha in (0, 1):
        fiber = specialize(family, alpha)
        reg = max(reg, free_resolution(fiber).betti_table().regularity())
    base = reg + family.nvars + WINDOW_EXTRA
    return -base, base


def _identity_rows(size: int, ring: TruncatedRing) -> List[Dict[int, Any]]:
    return [{i: ring.ring.one} for i in range(size)]


def cohomology_is_free(previous: Optional[ExactMatrix], current: Optional[ExactMatrix], size: int,
                       q: int, domain) -> Tuple[bool, int]:
    """
    Freeness of H = ker(current) / im(previous) over k[t]/(t^q).

    Args:
        previous: Strand of δ^{k-1} (rows are images in K^k), or None
        current: Strand of δ^k (rows index K^k), or None
        size: Rank of K^k_μ over k[t]

    Returns:
        (is free, dim_k H)
    """
    ring = TruncatedRing(domain, q)
    if current is None or current.ncols == 0:
        kernel_rows = _identity_rows(size, ring)
    else:
        kernel_rows = list(left_kernel(truncate_matrix(current, q)).rows.values())
    image_rows = [] if previous is None else list(truncate_matrix(previous, q).rows.values())
    dim_kernel = span_dimension(kernel_rows, size, domain, q)
    dim_image = span_dimension(image_rows, size, domain, q)
    dim_reduced = span_dimension(image_rows + times_t(kernel_rows, domain, q), size, domain, q)
    dim_h = dim_kernel - dim_image
    return dim_h == q * (dim_kernel - dim_reduced), dim_h


def fiber_full_family_check(family: FamilyIdeal, q_max: int = DEFAULT_Q_MAX,
                            window: Optional[Tuple[int, int]] = None,
                            logger: Optional[logging.Logger] = None) -> FiberFullReport:
    """
    Check that every H^i(K_μ ⊗ k[t]/(t^q)) is free for q = 1..q_max on a window.

    Args:
        family: Family with x-homogeneous generators
        q_max: Largest truncation order
        window: Degrees ν of local cohomology (μ = -ν - n on the Ext side)

    Returns:
        FiberFullReport; non-flat families get flat = false and every verdict false
    """
    logger = logger or logging.getLogger(__name__)
    if q_max < 1:
        raise InputError(f"q must be >= 1, got {q_max}.")
    window = window or default_window(family)
    lo, hi = window
    n = family.nvars
    top = max(hi, family.default_window()[1])
    if not family_is_flat(family, (0, max(top, 0))):
        logger.info("Family is not flat; every verdict is false")
        return FiberFullReport(False, window, q_max, {q: False for q in range(1, q_max + 1)})

    resolution = free_resolution(Ideal(family.generators, family.ring))
    dual = DualComplex(resolution)
    domain = family.domain
    report = FiberFullReport(True, window, q_max, local_free=True)
    least_valuation: Optional[int] = None
    strands: Dict[Tuple[int, int], ExactMatrix] = {}
    for nu in range(lo, hi + 1):
        mu = -nu - n
        for k in dual.maps:
            strand = dual.strand(k, mu)
            strands[(k, mu)] = strand
            for d in smith_normal_form(strand).invariant_factors:
                v = valuation(d)
                if v > 0:
                    report.local_free = False
                    least_valuation = v if least_valuation is None else min(least_valuation, v)
    report.first_failing_q = None if least_valuation is None else least_valuation + 1

    for q in tqdm(range(1, q_max + 1), desc="Truncations", unit="q", disable=None, leave=False):
        free_everywhere = True
        for nu in range(lo, hi + 1):
            mu = -nu - n
            for k in dual.positions():
                size = dual.strand_dimension(k, mu)
                if size == 0:
                    continue
                free, _ = cohomology_is_free(strands.get((k - 1, mu)), strands.get((k, mu)), size, q, domain)
                if not free:
                    free_everywhere = False
                    report.failures.append((q, n - k - 1, nu))
        report.verdicts[q] = free_everywhere
        expected = report.first_failing_q is None or q < report.first_failing_q
        if free_everywhere != expected:
            raise InvariantViolation(
                f"Howell verdict {free_everywhere} at q = {q} disagrees with the Smith certificate "
                f"(first failing q = {report.first_failing_q})."
            )
    logger.info(f"Fiber-full check on [{lo}, {hi}]: {report.verdicts}")
    return report
