"""
Sparse exact matrices.

``ExactMatrix`` stores only nonzero entries as a dict of rows. Entries are field elements, or
polynomials in t (base ``k[t]``), or truncated polynomials (base ``k[t]/t^q``). Linear algebra
over a field is delegated to sympy's sparse ``DomainMatrix``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

FIELD = "field"
POLY_T = "k[t]"
TRUNCATED = "k[t]/t^q"

Rows = Dict[int, Dict[int, Any]]


@dataclass
class ExactMatrix:
    """Rectangular sparse matrix over a declared base ring."""

    nrows: int
    ncols: int
    domain: Any
    rows: Rows = field(default_factory=dict)
    base: str = FIELD
    q: Optional[int] = None

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[Any]], domain, base: str = FIELD,
                   q: Optional[int] = None) -> "ExactMatrix":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows: Rows = {}
        for i, row in enumerate(entries):
            if len(row) != ncols:
                raise ValueError("Matrix rows must have equal length.")
            kept = {j: v for j, v in enumerate(row) if v}
            if kept:
                rows[i] = kept
        return cls(nrows, ncols, domain, rows, base, q)

    def entry(self, i: int, j: int) -> Any:
        return self.rows.get(i, {}).get(j)

    def to_dense(self, zero: Any) -> List[List[Any]]:
        return [[self.rows.get(i, {}).get(j, zero) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def transpose(self) -> "ExactMatrix":
        rows: Rows = {}
        for i, row in self.rows.items():
            for j, v in row.items():
                rows.setdefault(j, {})[i] = v
        return ExactMatrix(self.ncols, self.nrows, self.domain, rows, self.base, self.q)

    def map_entries(self, fn, domain=None, base: Optional[str] = None,
                    q: Optional[int] = None) -> "ExactMatrix":
        rows: Rows = {}
        for i, row in self.rows.items():
            kept = {}
            for j, v in row.items():
                w = fn(v)
                if w:
                    kept[j] = w
            if kept:
                rows[i] = kept
        return ExactMatrix(self.nrows, self.ncols, domain or self.domain, rows,
                           base or self.base, q if q is not None else self.q)

    def is_zero(self) -> bool:
        return not any(self.rows.values())

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())


def to_domain_matrix(m: ExactMatrix) -> DomainMatrix:
    """Sparse DomainMatrix view of a matrix over a field."""
    if m.base != FIELD:
        raise ValueError(f"rref needs a matrix over a field, got base {m.base}.")
    rows = {i: dict(row) for i, row in m.rows.items() if row}
    return DomainMatrix(rows, (m.nrows, m.ncols), m.domain)


def rref(m: ExactMatrix) -> Tuple[int, Tuple[int, ...], ExactMatrix]:
    """
    Reduced row-echelon form over a field.

    Args:
        m: Matrix over a field (empty matrices allowed)

    Returns:
        Tuple of (rank, pivot columns, reduced matrix)
    """
    if m.nrows == 0 or m.ncols == 0 or m.is_zero():
        return 0, (), ExactMatrix(m.nrows, m.ncols, m.domain, {}, FIELD)
    reduced, pivots = to_domain_matrix(m).rref()
    sparse = reduced.to_sparse().rep
    rows = {i: {j: v for j, v in row.items() if v} for i, row in sparse.items() if row}
    pivots = tuple(int(p) for p in pivots)
    return len(pivots), pivots, ExactMatrix(m.nrows, m.ncols, m.domain, rows, FIELD)


def rank(m: ExactMatrix) -> int:
    """Rank over a field."""
    if m.nrows == 0 or m.ncols == 0 or m.is_zero():
        return 0
    return int(to_domain_matrix(m).rank())


def matrix_from_vectors(vectors: Iterable[Dict[int, Any]], ncols: int, domain) -> ExactMatrix:
    rows: Rows = {}
    count = 0
    for i, v in enumerate(vectors):
        count = i + 1
        kept = {j: c for j, c in v.items() if c}
        if kept:
            rows[i] = kept
    return ExactMatrix(count, ncols, domain, rows, FIELD)
