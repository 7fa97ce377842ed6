"""
Stratum classification: ACM/AG predicates and equality of cohomology signatures.

Two subschemes lie in the same fiber-full stratum iff their signatures agree: equal tables,
equal tails and equal Hilbert polynomials.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..cohomology.ext import ext_series
from ..cohomology.sheaf import CohomologySignature, sheaf_cohomology_table
from ..errors import InputError, InvariantViolation, WindowError
from ..groebner.ideal import Ideal, saturate_irrelevant
from ..hilbert.series import hilbert_series
from ..resolution.complexes import DualComplex
from ..resolution.schreyer import free_resolution

logger = logging.getLogger(__name__)


@dataclass
class DepthReport:
    """Both routes to the Cohen-Macaulay property of S/I^sat."""

    dimension: int
    codimension: int
    projective_dimension: int
    ext_indices: List[int]
    cm_type: int
    unit: bool = False

    @property
    def acm_by_resolution(self) -> bool:
        return not self.unit and self.projective_dimension == self.codimension

    @property
    def acm_by_ext(self) -> bool:
        return not self.unit and self.ext_indices == [self.codimension]


@dataclass
class StratumClass:
    signature: CohomologySignature
    acm: bool
    ag: bool

    def to_json(self) -> Dict[str, Any]:
        return {"acm": self.acm, "ag": self.ag, "signature": self.signature.to_json()}


def _require_projective(ideal: Ideal) -> None:
    if ideal.has_parameter:
        raise InputError("Classification needs an ideal over a field; got a family.")
    if not ideal.homogeneous:
        raise InputError("Classification needs a homogeneous ideal.")


def depth_report(ideal: Ideal) -> DepthReport:
    """
    Projective dimension, codimension and nonzero Ext indices of S/I^sat.

    Depth comes from Auslander-Buchsbaum (depth = n - pd), never from regular sequences.
    """
    _require_projective(ideal)
    saturated = saturate_irrelevant(ideal)
    n = saturated.nvars
    if saturated.is_unit():
        return DepthReport(-1, n + 1, 0, [], 0, unit=True)
    resolution = free_resolution(saturated)
    betti = resolution.betti_table()
    dimension = hilbert_series(saturated).dimension()
    series = ext_series(DualComplex(resolution))
    report = DepthReport(
        dimension=dimension,
        codimension=n - dimension,
        projective_dimension=betti.projective_dimension(),
        ext_indices=[k for k, s in sorted(series.items()) if not s.is_zero()],
        cm_type=betti.cm_type(),
    )
    if report.acm_by_resolution != report.acm_by_ext:
        raise InvariantViolation(
            f"ACM routes disagree: pd = {report.projective_dimension}, codim = {report.codimension}, "
            f"nonzero Ext indices {report.ext_indices}."
        )
    logger.debug(f"Depth report: {report}")
    return report


def is_acm(ideal: Ideal) -> bool:
    """True iff S/I^sat is Cohen-Macaulay (false for the empty scheme)."""
    return depth_report(ideal).acm_by_resolution


def is_ag(ideal: Ideal) -> bool:
    """ACM with Cohen-Macaulay type 1."""
    report = depth_report(ideal)
    return report.acm_by_resolution and report.cm_type == 1


def classify(ideal: Ideal, window: Optional[Tuple[int, int]] = None) -> StratumClass:
    """
    Signature and ACM/AG flags of V(I).

    Raises:
        InvariantViolation: if an ACM input has intermediate cohomology on the window
    """
    report = depth_report(ideal)
    signature = sheaf_cohomology_table(ideal, window)
    acm = report.acm_by_resolution
    ag = acm and report.cm_type == 1
    if acm:
        for i in range(1, report.dimension - 1):
            if any(signature.h[i]):
                raise InvariantViolation(f"ACM scheme with nonzero h_{i} on the window.")
    logger.info(f"Classification: acm={acm}, ag={ag}")
    return StratumClass(signature, acm, ag)


def common_window(s1: CohomologySignature, s2: CohomologySignature) -> Tuple[int, int]:
    lo = max(s1.window[0], s2.window[0])
    hi = min(s1.window[1], s2.window[1])
    if lo > hi:
        raise WindowError(f"Disjoint windows {s1.window} and {s2.window}; widen one of them.")
    return lo, hi


def _span(s1: CohomologySignature, s2: CohomologySignature) -> Tuple[int, int]:
    """Degrees to scan: the common window, or everything not fixed by the tails when both extend."""
    if not (s1.extendable and s2.extendable):
        return common_window(s1, s2)
    lo1, hi1 = s1.covering_window()
    lo2, hi2 = s2.covering_window()
    return min(lo1, lo2), max(hi1, hi2)


def same_stratum(s1: CohomologySignature, s2: CohomologySignature) -> bool:
    """
    True iff the two signatures agree everywhere.

    Tails and Hilbert polynomials are compared symbolically. The tables are compared on the common
    window, and on every degree the tails do not determine when both signatures carry their series.
    """
    if s1.r != s2.r:
        return False
    common_window(s1, s2)
    if s1.hilbert_polynomial != s2.hilbert_polynomial or list(s1.tails) != list(s2.tails):
        return False
    return first_divergence(s1, s2) is None


def first_divergence(s1: CohomologySignature, s2: CohomologySignature) -> Optional[Tuple[int, int]]:
    """
    First (i, ν) where the tables differ, scanning ν downwards and i upwards within each ν.
    None when the tables agree on every scanned degree.
    """
    if s1.r != s2.r:
        raise InputError(f"Signatures live in different projective spaces (r = {s1.r} and {s2.r}).")
    lo, hi = _span(s1, s2)
    for nu in range(hi, lo - 1, -1):
        for i in range(s1.r + 1):
            if s1.value(i, nu) != s2.value(i, nu):
                return i, nu
    return None


def group_by_stratum(signatures: Dict[str, CohomologySignature]) -> List[List[str]]:
    """Equivalence classes under same_stratum, in input order."""
    classes: List[List[str]] = []
    representatives: List[CohomologySignature] = []
    for name, signature in signatures.items():
        for members, rep in zip(classes, representatives):
            if same_stratum(rep, signature):
                members.append(name)
                break
        else:
            classes.append([name])
            representatives.append(signature)
    return classes
