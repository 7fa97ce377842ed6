"""
Smith normal form over k[t].

Gcd-driven elimination on sparse rows: the pivot is an entry of minimal degree, its column and
row are cleared by Euclidean division, and a pivot that fails to divide the rest of the matrix
absorbs an offending row. Unimodular transforms are tracked only on request.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .matrices import POLY_T, ExactMatrix
from .unipoly import degree, evaluate, is_unit, monic, uni_ring

logger = logging.getLogger(__name__)


@dataclass
class SmithForm:
    """
    Invariant factors d_1 | d_2 | ... | d_s (monic, nonzero) of a matrix over k[t].

    When transforms were requested, ``left`` and ``right`` are dense unimodular matrices with
    left * A * right equal to the diagonal matrix of the invariant factors.
    """

    invariant_factors: List[Any]
    nrows: int
    ncols: int
    left: Optional[List[List[Any]]] = None
    right: Optional[List[List[Any]]] = None
    pivots: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def fiber_rank(self, alpha) -> int:
        """Rank of the specialised matrix A(alpha) over k."""
        return sum(1 for d in self.invariant_factors if evaluate(d, alpha))

    def is_free_cokernel(self) -> bool:
        """True iff every invariant factor is a unit, i.e. the cokernel is k[t]-free."""
        return all(is_unit(d) for d in self.invariant_factors)


class _Eliminator:
    """Mutable sparse state for one Smith computation."""

    def __init__(self, m: ExactMatrix, transforms: bool):
        self.ring = uni_ring(m.domain)
        self.rows: Dict[int, Dict[int, Any]] = {
            i: {j: v for j, v in row.items() if v} for i, row in m.rows.items()
        }
        self.rows = {i: row for i, row in self.rows.items() if row}
        self.col_rows: Dict[int, set] = {}
        for i, row in self.rows.items():
            for j in row:
                self.col_rows.setdefault(j, set()).add(i)
        self.transforms = transforms
        one = self.ring.one
        self.left = {i: {i: one} for i in range(m.nrows)} if transforms else None
        self.right = {j: {j: one} for j in range(m.ncols)} if transforms else None

    def set_entry(self, i: int, j: int, value) -> None:
        row = self.rows.setdefault(i, {})
        if value:
            row[j] = value
            self.col_rows.setdefault(j, set()).add(i)
        else:
            row.pop(j, None)
            self.col_rows.get(j, set()).discard(i)
            if not row:
                del self.rows[i]

    def row_axpy(self, target: int, source: int, factor) -> None:
        """row_target += factor * row_source."""
        for j, v in list(self.rows.get(source, {}).items()):
            current = self.rows.get(target, {}).get(j, self.ring.zero)
            self.set_entry(target, j, current + factor * v)
        if self.transforms:
            _axpy(self.left, target, source, factor)

    def column_axpy_pivot_row(self, r: int, target: int, source: int, factor) -> None:
        """col_target += factor * col_source when col_source is zero outside row r."""
        current = self.rows.get(r, {}).get(target, self.ring.zero)
        self.set_entry(r, target, current + factor * self.rows[r][source])
        if self.transforms:
            _axpy(self.right, target, source, factor)

    def min_degree_entry(self) -> Tuple[int, int]:
        best = None
        for i, row in self.rows.items():
            for j, v in row.items():
                key = (degree(v), i, j)
                if best is None or key < best:
                    best = key
                    if key[0] == 0:
                        return i, j
        return best[1], best[2]

    def remove_pivot(self, r: int, c: int) -> None:
        self.set_entry(r, c, self.ring.zero)
        self.col_rows.pop(c, None)


def _axpy(store: Dict[int, Dict[int, Any]], target: int, source: int, factor) -> None:
    row = store[target]
    for k, v in store[source].items():
        value = row.get(k, 0) + factor * v
        if value:
            row[k] = value
        else:
            row.pop(k, None)


def smith_normal_form(m: ExactMatrix, transforms: bool = False) -> SmithForm:
    """
    Invariant factors of a matrix over k[t].

    Args:
        m: Matrix with entries in k[t]
        transforms: Also return unimodular P, Q with P*A*Q diagonal

    Returns:
        SmithForm with monic invariant factors forming a divisibility chain
    """
    if m.base != POLY_T:
        raise ValueError(f"Smith form needs a matrix over k[t], got base {m.base}.")
    state = _Eliminator(m, transforms)
    factors: List[Any] = []
    pivots: List[Tuple[int, int]] = []

    while state.rows:
        r, c = state.min_degree_entry()
        while True:
            p = state.rows[r][c]
            moved = False
            for i in sorted(state.col_rows.get(c, set()) - {r}):
                q, _ = state.rows[i][c].div(p)
                state.row_axpy(i, r, -q)
                if state.rows.get(i, {}).get(c):
                    r, moved = i, True
                    break
            if moved:
                continue
            for j in sorted(set(state.rows[r]) - {c}):
                q, _ = state.rows[r][j].div(p)
                state.column_axpy_pivot_row(r, j, c, -q)
                if state.rows.get(r, {}).get(j):
                    c, moved = j, True
                    break
            if moved:
                continue
            if not is_unit(p):
                offender = _non_divisible_row(state, p, r)
                if offender is not None:
                    state.row_axpy(r, offender, state.ring.one)
                    continue
            break
        p = state.rows[r][c]
        lead = p.LC
        factors.append(monic(p))
        if transforms:
            inverse = state.ring.domain.quo(state.ring.domain.one, lead)
            state.left[r] = {k: v * inverse for k, v in state.left[r].items()}
        pivots.append((r, c))
        state.remove_pivot(r, c)

    logger.debug(f"Smith form of {m.nrows}x{m.ncols} matrix: {len(factors)} invariant factors")
    result = SmithForm(factors, m.nrows, m.ncols, pivots=pivots)
    if transforms:
        result.left, result.right = _arrange_transforms(state, pivots, m.nrows, m.ncols)
    return result


def _non_divisible_row(state: _Eliminator, p, r: int) -> Optional[int]:
    for i, row in state.rows.items():
        if i == r:
            continue
        for v in row.values():
            if v.rem(p):
                return i
    return None


def _arrange_transforms(state: _Eliminator, pivots, nrows: int, ncols: int):
    """Permute rows of P and columns of Q so the invariant factors sit on the diagonal."""
    zero = state.ring.zero
    row_order = [r for r, _ in pivots] + [i for i in range(nrows) if i not in {r for r, _ in pivots}]
    col_order = [c for _, c in pivots] + [j for j in range(ncols) if j not in {c for _, c in pivots}]
    left = [[state.left[i].get(k, zero) for k in range(nrows)] for i in row_order]
    right = [[state.right[j].get(k, zero) for j in col_order] for k in range(ncols)]
    return left, right


def invariant_factors(m: ExactMatrix) -> List[Any]:
    return smith_normal_form(m).invariant_factors
