"""
Sheaf cohomology tables h_i(ν) = dim H^i(X, O_X(ν)) of projective subschemes X = V(I) ⊂ P^r.

On the saturation J of I, with n = r + 1 variables:

    h_0(ν) = dim [S/J]_ν + dim H^1_m(S/J)_ν
    h_i(ν) = dim H^{i+1}_m(S/J)_ν          (1 <= i <= r)

Outside the window the values are read from the Hilbert series of S/J and of the Ext modules.
Below the stable range each h_i follows its lower tail HP_{Ext^{n-1-i}}(-ν - n). Above it h_0 is
the Hilbert polynomial P_h and every other h_i vanishes.
"""

import dataclasses
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from ..core.scalars import field_label
from ..errors import InputError, InvariantViolation, WindowError
from ..groebner.ideal import Ideal, saturate_irrelevant
from ..hilbert.euler import euler_polynomial
from ..hilbert.numerical import NumericalPolynomial
from ..hilbert.series import HilbertSeries, hilbert_series
from ..resolution.complexes import DualComplex, FreeResolution
from ..resolution.schreyer import free_resolution
from ..settings import SCHEMA_VERSION, WINDOW_EXTRA
from .ext import ext_series
from .local import local_cohomology_table

logger = logging.getLogger(__name__)


@dataclass
class CohomologySignature:
    """
    The tuple h = (h_0, .., h_r) on a window, with tails and the Hilbert polynomial.

    Args:
        r: Dimension of the ambient projective space
        window: (ν_min, ν_max)
        h: h[i][ν - ν_min]
        tails: Lower tail polynomials (in ``nu``) per i
        hilbert_polynomial: P_h (in ``m``)
        field: Field label, ``Q`` or ``F p``
        provenance: Ideal hash and order of the canonical basis
        raw_hilbert: Hilbert function of the unsaturated input on the window
        quotient: Hilbert series of S/J
        ext: Hilbert series of Ext^k(S/J, S) per k
        stable_window: Degrees outside which the tails and P_h give every value
    """

    r: int
    window: Tuple[int, int]
    h: List[List[int]]
    tails: List[NumericalPolynomial]
    hilbert_polynomial: NumericalPolynomial
    field: str = "Q"
    provenance: Dict[str, Any] = dataclasses.field(default_factory=dict)
    raw_hilbert: Optional[List[int]] = None
    regularity: int = 0
    quotient: Optional[HilbertSeries] = dataclasses.field(default=None, repr=False, compare=False)
    ext: Optional[Dict[int, HilbertSeries]] = dataclasses.field(default=None, repr=False, compare=False)
    stable_window: Optional[Tuple[int, int]] = None

    @property
    def extendable(self) -> bool:
        return self.quotient is not None and self.ext is not None and self.stable_window is not None

    def value(self, i: int, nu: int) -> int:
        """
        h_i(ν) at any degree.

        Raises:
            WindowError: if ν is outside the window and the signature carries no series
        """
        if i < 0 or i > self.r:
            return 0
        lo, hi = self.window
        if lo <= nu <= hi:
            return self.h[i][nu - lo]
        if not self.extendable:
            raise WindowError(f"h_{i}({nu}) lies outside the window [{lo}, {hi}].")
        return self.exact_value(i, nu)

    def exact_value(self, i: int, nu: int) -> int:
        """h_i(ν) from the Hilbert series, H^{i+1}_m(S/J)_ν = Ext^{n-1-i}(S/J, S)_{-ν-n}."""
        n = self.r + 1
        series = self.ext.get(n - 1 - i)
        local = series.value(-nu - n) if series is not None else 0
        return local + (self.quotient.value(nu) if i == 0 else 0)

    def covering_window(self) -> Tuple[int, int]:
        """The window joined with the stable window."""
        lo, hi = self.window
        if self.stable_window is None:
            return lo, hi
        return min(lo, self.stable_window[0]), max(hi, self.stable_window[1])

    def row(self, i: int, window: Optional[Tuple[int, int]] = None) -> List[int]:
        lo, hi = window or self.window
        return [self.value(i, nu) for nu in range(lo, hi + 1)]

    def on_window(self, window: Tuple[int, int]) -> "CohomologySignature":
        """The same signature tabulated on another window."""
        lo, hi = window
        if lo > hi:
            raise WindowError(f"Empty window [{lo}, {hi}].")
        return CohomologySignature(
            r=self.r,
            window=(lo, hi),
            h=[self.row(i, window) for i in range(self.r + 1)],
            tails=list(self.tails),
            hilbert_polynomial=self.hilbert_polynomial,
            field=self.field,
            provenance=dict(self.provenance),
            raw_hilbert=None,
            regularity=self.regularity,
            quotient=self.quotient,
            ext=self.ext,
            stable_window=self.stable_window,
        )

    def check(self) -> None:
        """Nonnegativity, Serre vanishing past the regularity and the Euler identity."""
        lo, hi = self.window
        for i, row in enumerate(self.h):
            if any(v < 0 for v in row):
                raise InvariantViolation(f"Negative entry in h_{i}.")
            if i >= 1:
                for nu in range(max(lo, self.regularity), hi + 1):
                    if row[nu - lo]:
                        raise InvariantViolation(f"h_{i}({nu}) != 0 at or above the regularity {self.regularity}.")
        fitted = euler_polynomial(self.on_window(self.covering_window()) if self.extendable else self)
        if fitted != self.hilbert_polynomial:
            raise InvariantViolation(
                f"Euler identity fails: alternating sum is {fitted}, Hilbert polynomial is {self.hilbert_polynomial}."
            )

    def to_dataframe(self) -> pd.DataFrame:
        lo, hi = self.window
        frame = pd.DataFrame(self.h, index=[f"h_{i}" for i in range(self.r + 1)],
                             columns=list(range(lo, hi + 1)))
        frame.columns.name = "nu"
        return frame

    def to_text(self) -> str:
        lines = [self.to_dataframe().to_string()]
        for i, tail in enumerate(self.tails):
            lines.append(f"tail h_{i}(nu), nu < {self.window[0]}: {tail}")
        lines.append(f"P_h = {self.hilbert_polynomial}")
        return "\n".join(lines)

    def to_json(self) -> Dict[str, Any]:
        lo, hi = self.window
        report: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "r": self.r,
            "window": [lo, hi],
            "h": [list(row) for row in self.h],
            "tails": [{"i": i, "poly": str(tail)} for i, tail in enumerate(self.tails)],
            "P_h": str(self.hilbert_polynomial),
            "field": self.field,
            "provenance": dict(self.provenance),
        }
        if self.raw_hilbert is not None:
            report["raw_hilbert"] = list(self.raw_hilbert)
        return report


def window_for(regularity: int, n: int, quotient: HilbertSeries,
               series: Dict[int, HilbertSeries]) -> Tuple[int, int]:
    """
    [-(reg + n + 2), reg + n + 2], widened until every Ext module has stabilised below the
    window and vanishes above it.
    """
    base = regularity + n + WINDOW_EXTRA
    lo, hi = -base, base
    for s in series.values():
        if s.is_zero():
            continue
        lo = min(lo, 1 - n - s.stabilization_degree())
        hi = max(hi, 1 - n - s.initial_degree())
    if not quotient.is_zero():
        hi = max(hi, quotient.stabilization_degree())
    return lo, hi


def _prepare(ideal: Ideal) -> Tuple[Ideal, FreeResolution, Dict[int, HilbertSeries]]:
    if ideal.has_parameter:
        raise InputError("Cohomology tables need an ideal over a field; got a family.")
    if not ideal.homogeneous:
        raise InputError("Cohomology tables need a homogeneous ideal.")
    saturated = saturate_irrelevant(ideal)
    resolution = free_resolution(saturated)
    return saturated, resolution, ext_series(DualComplex(resolution))


def signatures_window(ideal: Ideal) -> Tuple[int, int]:
    """Default window for the signature of V(I), sized from the minimal resolution of I^sat."""
    saturated, resolution, series = _prepare(ideal)
    return window_for(resolution.betti_table().regularity(), saturated.nvars,
                      hilbert_series(saturated), series)


def sheaf_cohomology_table(ideal: Ideal, window: Optional[Tuple[int, int]] = None,
                           logger: Optional[logging.Logger] = None) -> CohomologySignature:
    """
    Cohomology signature of V(I).

    Args:
        ideal: Homogeneous ideal over a field (saturated internally)
        window: (ν_min, ν_max); the default window is used when omitted

    Returns:
        CohomologySignature with the Euler identity checked on the window
    """
    logger = logger or logging.getLogger(__name__)
    saturated, resolution, series = _prepare(ideal)
    n = saturated.nvars
    regularity = resolution.betti_table().regularity()
    quotient = hilbert_series(saturated)
    stable = window_for(regularity, n, quotient, series)
    if window is None:
        window = stable
        logger.info(f"Signature window: [{window[0]}, {window[1]}]")
    lo, hi = window
    if lo > hi:
        raise WindowError(f"Empty window [{lo}, {hi}].")

    local = local_cohomology_table(saturated, window, resolution, series, logger)
    degrees = range(lo, hi + 1)
    h = [[quotient.value(nu) + local.dims[1][k] for k, nu in enumerate(degrees)]]
    h += [list(local.dims[i + 1]) for i in range(1, n)]
    tails = [local.tails[i + 1] for i in range(n)]
    raw = hilbert_series(ideal)

    signature = CohomologySignature(
        r=n - 1,
        window=(lo, hi),
        h=h,
        tails=tails,
        hilbert_polynomial=quotient.polynomial(),
        field=field_label(ideal.domain),
        provenance={"ideal": ideal.digest(), "order": "grevlex", "saturated": bool(ideal.saturated)},
        raw_hilbert=[raw.value(nu) for nu in degrees],
        regularity=regularity,
        quotient=quotient,
        ext=dict(series),
        stable_window=stable,
    )
    signature.check()
    logger.debug(f"Cohomology signature:\n{signature.to_dataframe()}")
    return signature
