"""
Local cohomology H^j_m(M) of graded modules through graded local duality.

With n variables of degree one, dim_k H^j_m(M)_ν = dim_k Ext^{n-j}(M, S)_{-ν-n}. Every table here
is the index-flipped ExtTable: j <-> n - j and ν <-> -ν - n.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd

from ..errors import InvariantViolation, WindowError
from ..groebner.ideal import Ideal
from ..hilbert.numerical import NumericalPolynomial
from ..hilbert.series import HilbertSeries, hilbert_series
from ..resolution.complexes import FreeResolution
from ..resolution.modules import GradedModule
from .ext import ExtTable, ext_dimensions

logger = logging.getLogger(__name__)


def flip_index(j: int, n: int) -> int:
    return n - j


def flip_degree(nu: int, n: int) -> int:
    return -nu - n


def flip_window(window: Tuple[int, int], n: int) -> Tuple[int, int]:
    lo, hi = window
    return flip_degree(hi, n), flip_degree(lo, n)


def dualize_table(dims: Dict[int, List[int]], window: Tuple[int, int],
                  n: int) -> Tuple[Dict[int, List[int]], Tuple[int, int]]:
    """Apply the duality flip to a table of dimensions. The flip is an involution."""
    flipped = {flip_index(j, n): list(reversed(row)) for j, row in dims.items()}
    return dict(sorted(flipped.items())), flip_window(window, n)


@dataclass
class LocalCohTable:
    """
    dims[j][ν - lo] = dim_k H^j_m(M)_ν on the window [lo, hi], for 0 <= j <= n.

    ``tails[j]`` is the polynomial in ``nu`` that H^j_m(M)_ν follows for ν << 0.
    """

    n: int
    window: Tuple[int, int]
    dims: Dict[int, List[int]]
    tails: Dict[int, NumericalPolynomial]
    ext: ExtTable
    dimension: int

    def dim(self, j: int, nu: int) -> int:
        """Exact value at any degree, read from the dual Ext module."""
        return self.ext.dim(flip_index(j, self.n), flip_degree(nu, self.n))

    def nonzero_indices(self) -> List[int]:
        return [j for j in range(self.n + 1) if not self.ext.series[flip_index(j, self.n)].is_zero()]

    @property
    def depth(self) -> int:
        """Least j with H^j_m(M) != 0 (n + 1 for the zero module)."""
        nonzero = self.nonzero_indices()
        return min(nonzero) if nonzero else self.n + 1

    def is_cohen_macaulay(self) -> bool:
        """M != 0 and only H^{dim M}_m(M) is nonzero."""
        return self.dimension >= 0 and self.nonzero_indices() == [self.dimension]

    def to_dataframe(self) -> pd.DataFrame:
        lo, hi = self.window
        frame = pd.DataFrame(
            [self.dims[j] for j in range(self.n + 1)],
            index=[f"H^{j}" for j in range(self.n + 1)],
            columns=list(range(lo, hi + 1)),
        )
        frame.columns.name = "nu"
        return frame

    def to_json(self) -> Dict:
        lo, hi = self.window
        return {
            "n": self.n,
            "window": [lo, hi],
            "dims": [self.dims[j] for j in range(self.n + 1)],
            "tails": [{"j": j, "poly": str(self.tails[j])} for j in range(self.n + 1)],
        }


def _dimension(source: Union[Ideal, GradedModule]) -> int:
    if isinstance(source, Ideal):
        return hilbert_series(source).dimension()
    return source.hilbert_series().dimension()


def lower_tail(series: HilbertSeries, n: int) -> NumericalPolynomial:
    """ν -> HP_E(-ν - n) for an Ext module E with Hilbert series ``series``, as a polynomial in nu."""
    return series.polynomial().substitute(-1, -n).renamed("nu")


def local_cohomology_table(source: Union[Ideal, GradedModule], window: Tuple[int, int],
                           resolution: Optional[FreeResolution] = None,
                           series: Optional[Dict[int, HilbertSeries]] = None,
                           logger: Optional[logging.Logger] = None) -> LocalCohTable:
    """
    Local cohomology of S/I (or of a presented module) on a degree window.

    Args:
        source: Homogeneous ideal over a field (not saturated first) or GradedModule
        window: (lo, hi) range of ν
        resolution: Reuse an already computed minimal resolution

    Returns:
        LocalCohTable satisfying Grothendieck vanishing above dim M
    """
    logger = logger or logging.getLogger(__name__)
    lo, hi = window
    if lo > hi:
        raise WindowError(f"Empty window [{lo}, {hi}].")
    ext = ext_dimensions(source, flip_window(window, source.nvars), resolution, series, logger)
    n = ext.n
    dims, flipped = dualize_table(ext.dims, ext.window, n)
    if flipped != (lo, hi):
        raise InvariantViolation(f"Duality flip maps the Ext window to {flipped}, expected {(lo, hi)}.")
    tails = {j: lower_tail(ext.series[flip_index(j, n)], n) for j in range(n + 1)}
    dimension = _dimension(source)

    table = LocalCohTable(n, (lo, hi), dims, tails, ext, dimension)
    for j in table.nonzero_indices():
        if j > dimension:
            raise InvariantViolation(f"H^{j}_m is nonzero above the Krull dimension {dimension}.")
    logger.debug(f"Local cohomology on [{lo}, {hi}]:\n{table.to_dataframe()}")
    return table
