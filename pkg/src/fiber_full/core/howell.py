"""
Howell normal form over the truncated ring B = k[t]/(t^q).

B is a chain ring: every nonzero element is t^v times a unit. The Howell form is a row echelon
form whose pivots are t^v, whose entries above a pivot t^v have t-degree < v, and whose rows
satisfy the Howell property: every element of the row span with zeros in the first j columns
is a combination of the rows with pivot column > j. That property is what makes kernels
readable from the form of [M | I].
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc

from .matrices import POLY_T, TRUNCATED, ExactMatrix
from .unipoly import shift_down, uni_ring, valuation

logger = logging.getLogger(__name__)

Row = Dict[int, Any]


class TruncatedRing:
    """Arithmetic in k[t]/(t^q) on top of sympy's ring series helpers."""

    def __init__(self, domain, q: int):
        if q < 1:
            raise ValueError(f"Truncation order q must be >= 1, got {q}.")
        self.domain = domain
        self.q = q
        self.ring = uni_ring(domain)
        self.t = self.ring.gens[0]

    def reduce(self, f):
        return rs_trunc(f, self.t, self.q)

    def mul(self, a, b):
        return rs_mul(a, b, self.t, self.q)

    def valuation(self, f) -> int:
        """t-adic valuation; q for zero."""
        f = self.reduce(f)
        return self.q if not f else valuation(f)

    def unit_inverse(self, u):
        return rs_series_inversion(u, self.t, self.q)

    def power(self, v: int):
        return self.ring.from_dict({(v,): self.domain.one}) if v < self.q else self.ring.zero

    def split(self, f, v: int) -> Tuple[Any, Any]:
        """f = low + t^v * high with deg low < v."""
        low = {m: c for m, c in f.items() if m[0] < v}
        high = {(m[0] - v,): c for m, c in f.items() if m[0] >= v}
        return self.ring.from_dict(low), self.ring.from_dict(high)


@dataclass
class HowellForm:
    """Canonical row-span generators over k[t]/(t^q)."""

    rows: List[Row]
    pivots: List[Tuple[int, int]]
    ncols: int
    q: int
    domain: Any = None

    def dimension(self) -> int:
        """dim_k of the row span: sum of q - v over the pivots t^v."""
        return sum(self.q - v for _, v in self.pivots)

    def to_matrix(self) -> ExactMatrix:
        rows = {i: dict(row) for i, row in enumerate(self.rows)}
        return ExactMatrix(len(self.rows), self.ncols, self.domain, rows, TRUNCATED, self.q)


def truncate_matrix(m: ExactMatrix, q: int) -> ExactMatrix:
    """Reduce a matrix over k[t] (or over a field) modulo t^q."""
    base = TruncatedRing(m.domain, q)
    if m.base == POLY_T or m.base == TRUNCATED:
        convert = base.reduce
    else:
        convert = lambda c: base.ring.ground_new(c)  # noqa: E731
    return m.map_entries(convert, base=TRUNCATED, q=q)


def _axpy(ring: TruncatedRing, target: Row, source: Row, factor) -> Row:
    """target + factor * source, truncated."""
    result = dict(target)
    for j, v in source.items():
        value = ring.reduce(result.get(j, ring.ring.zero) + ring.mul(factor, v))
        if value:
            result[j] = value
        else:
            result.pop(j, None)
    return result


def _scale(ring: TruncatedRing, row: Row, factor) -> Row:
    scaled = {}
    for j, v in row.items():
        value = ring.mul(factor, v)
        if value:
            scaled[j] = value
    return scaled


def howell_form(m: ExactMatrix) -> HowellForm:
    """
    Howell form of a matrix over k[t]/(t^q).

    Args:
        m: Matrix with base ``k[t]/t^q`` (q taken from the matrix)

    Returns:
        HowellForm whose rows span the same row module
    """
    if m.base != TRUNCATED or m.q is None:
        raise ValueError(f"Howell form needs a matrix over k[t]/t^q, got base {m.base}.")
    ring = TruncatedRing(m.domain, m.q)
    pending: List[Row] = []
    for i in range(m.nrows):
        row = {j: ring.reduce(v) for j, v in m.rows.get(i, {}).items()}
        row = {j: v for j, v in row.items() if v}
        if row:
            pending.append(row)

    result: List[Row] = []
    pivots: List[Tuple[int, int]] = []
    for col in range(m.ncols):
        candidates = [k for k, row in enumerate(pending) if col in row]
        if not candidates:
            continue
        chosen = min(candidates, key=lambda k: (ring.valuation(pending[k][col]), k))
        pivot_row = pending[chosen]
        v = ring.valuation(pivot_row[col])
        unit = shift_down(pivot_row[col], v)
        pivot_row = _scale(ring, pivot_row, ring.unit_inverse(unit))

        remaining: List[Row] = []
        for k, row in enumerate(pending):
            if k == chosen:
                continue
            if col in row:
                factor = shift_down(row[col], v)
                row = _axpy(ring, row, pivot_row, -factor)
            if row:
                remaining.append(row)
        if v > 0:
            saturation = _scale(ring, pivot_row, ring.power(m.q - v))
            if saturation:
                remaining.append(saturation)
        result.append(pivot_row)
        pivots.append((col, v))
        pending = remaining

    for i, (col, v) in enumerate(pivots):
        for k in range(i):
            entry = result[k].get(col)
            if entry is None:
                continue
            _, high = ring.split(entry, v)
            if high:
                result[k] = _axpy(ring, result[k], result[i], -high)

    logger.debug(f"Howell form over k[t]/t^{m.q}: {len(result)} rows from {m.nrows}")
    return HowellForm(result, pivots, m.ncols, m.q, m.domain)


def howell_reduce(m: ExactMatrix) -> ExactMatrix:
    """Canonical spanning form of the row module of m; idempotent."""
    return howell_form(m).to_matrix()


def left_kernel(m: ExactMatrix) -> ExactMatrix:
    """
    Generators of {x : x * m = 0} over k[t]/(t^q), as the rows of a matrix.

    Read from the rows of the Howell form of [m | I] whose first block vanishes.
    """
    ring = TruncatedRing(m.domain, m.q)
    augmented: Dict[int, Row] = {}
    for i in range(m.nrows):
        row = dict(m.rows.get(i, {}))
        row[m.ncols + i] = ring.ring.one
        augmented[i] = row
    form = howell_form(ExactMatrix(m.nrows, m.ncols + m.nrows, m.domain, augmented,
                                   TRUNCATED, m.q))
    kernel: Dict[int, Row] = {}
    for row in form.rows:
        if all(j >= m.ncols for j in row):
            kernel[len(kernel)] = {j - m.ncols: v for j, v in row.items()}
    return ExactMatrix(len(kernel), m.nrows, m.domain, kernel, TRUNCATED, m.q)


def kernel(m: ExactMatrix) -> ExactMatrix:
    """Generators of {y : m * y = 0}, returned as the rows of a matrix."""
    return left_kernel(m.transpose())


def span_dimension(rows: List[Row], ncols: int, domain, q: int) -> int:
    """dim_k of the B-module spanned by the given rows."""
    matrix = ExactMatrix(len(rows), ncols, domain, dict(enumerate(rows)), TRUNCATED, q)
    return howell_form(matrix).dimension()


def times_t(rows: List[Row], domain, q: int) -> List[Row]:
    ring = TruncatedRing(domain, q)
    return [r for r in (_scale(ring, row, ring.t) for row in rows) if r]
