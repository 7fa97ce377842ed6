"""
Graded Ext modules Ext^k_S(M, S) from the dual of a minimal free resolution.

Dimensions are computed twice: by rank-nullity on the degree strands of Hom(F_., S), and from
the exact Hilbert series

    HS(Ext^k) = HS(K^k) - HS(im δ^k) - HS(im δ^{k-1})

whose image series come from module Groebner bases. The series also give the tails.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from tqdm import tqdm

from ..errors import InvariantViolation, WindowError
from ..groebner.ideal import Ideal
from ..hilbert.numerical import NumericalPolynomial
from ..hilbert.series import HilbertSeries, free_module_series
from ..poly.polynomials import x_count
from ..resolution.complexes import DualComplex, FreeResolution
from ..resolution.modules import GradedModule, submodule_series, vector_from_columns
from ..resolution.schreyer import free_resolution

logger = logging.getLogger(__name__)


@dataclass
class ExtTable:
    """
    dims[k][μ - lo] = dim_k Ext^k(M, S)_μ on the window [lo, hi], for 0 <= k <= n.

    ``series[k]`` is the exact Hilbert series of Ext^k, ``tails[k]`` its Hilbert polynomial and
    ``stabilization[k]`` the degree from which the two agree.
    """

    n: int
    window: Tuple[int, int]
    dims: Dict[int, List[int]]
    series: Dict[int, HilbertSeries] = field(default_factory=dict)
    tails: Dict[int, NumericalPolynomial] = field(default_factory=dict)
    stabilization: Dict[int, int] = field(default_factory=dict)

    def dim(self, k: int, mu: int) -> int:
        lo, hi = self.window
        if k < 0 or k > self.n:
            return 0
        if lo <= mu <= hi:
            return self.dims[k][mu - lo]
        return self.series[k].value(mu)

    def nonzero_indices(self) -> List[int]:
        return [k for k in range(self.n + 1) if not self.series[k].is_zero()]

    def check_tails(self) -> None:
        """Tail polynomials match the table on the two outermost window degrees past stabilization."""
        lo, hi = self.window
        for k in range(self.n + 1):
            for mu in (hi - 1, hi):
                if mu >= max(lo, self.stabilization[k]) and self.dims[k][mu - lo] != self.tails[k](mu):
                    raise InvariantViolation(f"Tail of Ext^{k} disagrees with the table at degree {mu}.")


def ext_series(dual: DualComplex) -> Dict[int, HilbertSeries]:
    """Exact Hilbert series of every H^k(Hom(F_., S))."""
    nvars = x_count(dual.ring)
    domain = dual.ring.domain
    images: Dict[int, HilbertSeries] = {}
    for k, matrix in dual.maps.items():
        generators = [vector_from_columns(matrix.column(s)) for s in range(matrix.ncols)]
        images[k] = submodule_series(dual.degrees[k + 1], generators, domain, nvars)
    result = {}
    for k in dual.positions():
        total = free_module_series(dual.degrees[k], nvars)
        if k in images:
            total = total - images[k]
        if k - 1 in images:
            total = total - images[k - 1]
        result[k] = total
    return result


def resolve(source: Union[Ideal, GradedModule], resolution: Optional[FreeResolution] = None) -> FreeResolution:
    return resolution if resolution is not None else free_resolution(source)


def ext_dimensions(source: Union[Ideal, GradedModule], window: Tuple[int, int],
                   resolution: Optional[FreeResolution] = None,
                   series: Optional[Dict[int, HilbertSeries]] = None,
                   logger: Optional[logging.Logger] = None) -> ExtTable:
    """
    Dimensions of Ext^k(M, S)_μ on a degree window, M = S/I or a presented module.

    Args:
        source: Homogeneous ideal over a field, or GradedModule
        window: (lo, hi) range of internal degrees μ
        resolution: Reuse an already computed minimal resolution
        series: Reuse Ext series from ``ext_series`` of the same resolution

    Returns:
        ExtTable with entries for 0 <= k <= n (zero above the resolution length)
    """
    logger = logger or logging.getLogger(__name__)
    lo, hi = window
    if lo > hi:
        raise WindowError(f"Empty window [{lo}, {hi}].")
    resolution = resolve(source, resolution)
    dual = DualComplex(resolution)
    n = x_count(resolution.ring)
    series = dict(series) if series is not None else ext_series(dual)
    for k in range(n + 1):
        series.setdefault(k, HilbertSeries({}, n))

    dims: Dict[int, List[int]] = {k: [] for k in range(n + 1)}
    for mu in tqdm(range(lo, hi + 1), desc="Ext strands", unit="degree", disable=None, leave=False):
        strand = dual.cohomology_dims(mu)
        for k in range(n + 1):
            value = strand.get(k, 0)
            if value != series[k].value(mu):
                raise InvariantViolation(
                    f"Strand dimension of Ext^{k} in degree {mu} is {value}, "
                    f"Hilbert series gives {series[k].value(mu)}."
                )
            dims[k].append(value)

    table = ExtTable(
        n=n,
        window=(lo, hi),
        dims=dims,
        series=series,
        tails={k: s.polynomial() for k, s in series.items()},
        stabilization={k: s.stabilization_degree() for k, s in series.items()},
    )
    table.check_tails()
    logger.debug(f"Ext table on [{lo}, {hi}]: nonzero indices {table.nonzero_indices()}")
    return table
