"""
Fitting-ideal stratification of the t-line.

For each degree ν, [R/F]_ν ≅ k[t]^c / im(A_ν) has fiber dimension c - #{i : d_i(α) != 0} at t = α,
where d_i are the invariant factors of A_ν. The rank function ν -> h(ν) jumps exactly on the roots
of the nonunit invariant factors, so the strata are read from their irreducible factors.
"""

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from ..core.smith import SmithForm
from ..core.unipoly import format_uni, irreducible_factors, squarefree_part, uni_ring
from ..errors import InvariantViolation
from .family import FamilyIdeal, degree_smith_forms

logger = logging.getLogger(__name__)

GENERIC = "generic"


@dataclass
class Stratum:
    """A locally closed piece of the t-line with its rank function."""

    locus: Optional[Any]
    h: Dict[int, int]
    excluded: Optional[Any] = None

    @property
    def is_generic(self) -> bool:
        return self.locus is None

    def to_json(self) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "locus": GENERIC if self.is_generic else format_uni(self.locus),
            "h": {str(nu): v for nu, v in sorted(self.h.items())},
        }
        if self.is_generic and self.excluded is not None:
            report["excluded"] = format_uni(self.excluded)
        return report


@dataclass
class StratumReport:
    strata: List[Stratum]
    invariant_factors: Dict[int, List[Any]] = field(default_factory=dict)
    window: Tuple[int, int] = (0, 0)

    @property
    def generic(self) -> Stratum:
        return next(s for s in self.strata if s.is_generic)

    def closed(self) -> List[Stratum]:
        return [s for s in self.strata if not s.is_generic]

    def check(self) -> None:
        """Closed strata are disjoint and the generic stratum excludes exactly their union."""
        closed = [s.locus for s in self.closed()]
        if not closed:
            return
        ring = closed[0].ring
        product = reduce(lambda a, b: a * b, closed, ring.one)
        if squarefree_part(product) != product.monic():
            raise InvariantViolation("Closed strata overlap.")
        if self.generic.excluded is None or self.generic.excluded.monic() != product.monic():
            raise InvariantViolation("Generic stratum does not exclude exactly the closed strata.")

    def to_dataframe(self) -> pd.DataFrame:
        lo, hi = self.window
        frame = pd.DataFrame(
            [[s.h.get(nu, 0) for nu in range(lo, hi + 1)] for s in self.strata],
            index=[s.to_json()["locus"] for s in self.strata],
            columns=list(range(lo, hi + 1)),
        )
        frame.columns.name = "nu"
        return frame

    def to_json(self) -> Dict[str, Any]:
        return {
            "window": list(self.window),
            "strata": [s.to_json() for s in self.strata],
            "invariant_factors": {
                str(nu): [format_uni(d) for d in factors]
                for nu, factors in sorted(self.invariant_factors.items())
            },
        }


def stratify_forms(forms: Dict[int, Tuple[int, SmithForm]], domain) -> StratumReport:
    """
    Strata from per-degree (number of columns, Smith form) pairs.

    Factors with identical rank functions share one closed stratum.
    """
    generic = {nu: ncols - form.rank for nu, (ncols, form) in forms.items()}
    factors = []
    for _, form in forms.values():
        for d in form.invariant_factors:
            for p in irreducible_factors(d):
                if p not in factors:
                    factors.append(p)

    grouped: Dict[Tuple[Tuple[int, int], ...], List[Any]] = {}
    for p in factors:
        h = {
            nu: ncols - sum(1 for d in form.invariant_factors if d.rem(p))
            for nu, (ncols, form) in forms.items()
        }
        grouped.setdefault(tuple(sorted(h.items())), []).append(p)

    ring = uni_ring(domain)
    strata = []
    for key, members in grouped.items():
        locus = reduce(lambda a, b: a * b, members, ring.one)
        strata.append(Stratum(locus, dict(key)))
    strata.sort(key=lambda s: format_uni(s.locus))
    excluded = reduce(lambda a, b: a * b, [s.locus for s in strata], ring.one)
    strata.append(Stratum(None, generic, excluded if strata else None))
    lo = min(forms, default=0)
    hi = max(forms, default=0)
    report = StratumReport(
        strata,
        {nu: list(form.invariant_factors) for nu, (_, form) in forms.items()},
        (lo, hi),
    )
    report.check()
    return report


def fitting_stratify(family: FamilyIdeal, window: Optional[Tuple[int, int]] = None,
                     logger: Optional[logging.Logger] = None) -> StratumReport:
    """
    Stratify the t-line by the Hilbert function of the fibers on a window.

    Args:
        family: Family with x-homogeneous generators
        window: Degrees to inspect (the family's default window if omitted)

    Returns:
        StratumReport with the closed strata first and the generic stratum last
    """
    logger = logger or logging.getLogger(__name__)
    window = window or family.default_window()
    report = stratify_forms(degree_smith_forms(family, window), family.domain)
    logger.info(f"Fitting stratification into {len(report.strata)} strata:\n{report.to_dataframe()}")
    return report
