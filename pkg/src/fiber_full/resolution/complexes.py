"""
Free resolutions, bounded complexes of graded free modules and their degree strands.

Complexes are indexed cohomologically: ``maps[p]`` is δ^p : C^p -> C^{p+1}. A resolution
F_L -> ... -> F_0 is the complex with C^{-k} = F_k. Its dual Hom(F_., S) has K^k = Hom(F_k, S),
generator degrees negated and δ^k the transpose of d_{k+1}.

The strand of C^p in degree ν has the basis (s, x^a) with |a| = ν - deg e_s. Over a field the
strands are finite-dimensional vector spaces; for family rings the same basis spans a free
k[t]-module and the strand matrices have entries in k[t].
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.matrices import FIELD, POLY_T, ExactMatrix, rank
from ..core.unipoly import uni_ring
from ..errors import InputError, InvariantViolation
from ..poly.polynomials import has_parameter, monomials_of_degree, x_count
from .betti import IDEAL, BettiTable

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@dataclass
class PolyMatrix:
    """
    Sparse matrix of polynomials; column j is the image of the j-th source generator.
    """

    nrows: int
    ncols: int
    ring: Any
    entries: Dict[int, Dict[int, Any]] = field(default_factory=dict)

    @classmethod
    def from_columns(cls, columns: Sequence[Dict[int, Any]], nrows: int, ring) -> "PolyMatrix":
        entries: Dict[int, Dict[int, Any]] = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                if value:
                    entries.setdefault(i, {})[j] = value
        return cls(nrows, len(columns), ring, entries)

    def get(self, i: int, j: int):
        return self.entries.get(i, {}).get(j, self.ring.zero)

    def column(self, j: int) -> Dict[int, Any]:
        return {i: row[j] for i, row in self.entries.items() if j in row}

    def transpose(self) -> "PolyMatrix":
        entries: Dict[int, Dict[int, Any]] = {}
        for i, row in self.entries.items():
            for j, value in row.items():
                entries.setdefault(j, {})[i] = value
        return PolyMatrix(self.ncols, self.nrows, self.ring, entries)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"Cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}.")
        entries: Dict[int, Dict[int, Any]] = {}
        for i, row in self.entries.items():
            for k, a in row.items():
                for j, b in other.entries.get(k, {}).items():
                    target = entries.setdefault(i, {})
                    value = target.get(j, self.ring.zero) + a * b
                    if value:
                        target[j] = value
                    else:
                        target.pop(j, None)
        return PolyMatrix(self.nrows, other.ncols, self.ring, {i: r for i, r in entries.items() if r})

    def is_zero(self) -> bool:
        return not any(self.entries.values())

    def map_entries(self, fn, ring) -> "PolyMatrix":
        entries = {}
        for i, row in self.entries.items():
            kept = {j: fn(v) for j, v in row.items()}
            kept = {j: v for j, v in kept.items() if v}
            if kept:
                entries[i] = kept
        return PolyMatrix(self.nrows, self.ncols, ring, entries)


def strand_basis(degrees: Sequence[int], nu: int, nx: int) -> List[Tuple[int, Monomial]]:
    """Basis (s, x-monomial) of the degree-nu strand of ⊕ S e_s with deg e_s = degrees[s]."""
    basis = []
    for s, d in enumerate(degrees):
        for m in monomials_of_degree(nx, nu - d):
            basis.append((s, m))
    return basis


def strand_matrix(matrix: PolyMatrix, source_degrees: Sequence[int], target_degrees: Sequence[int],
                  nu: int) -> ExactMatrix:
    """
    Matrix of a degree-0 map on the degree-nu strands.

    Rows are indexed by the source strand basis, columns by the target strand basis. Entries lie
    in k for rings over a field and in k[t] for family rings.
    """
    ring = matrix.ring
    nx = x_count(ring)
    family = has_parameter(ring)
    source = strand_basis(source_degrees, nu, nx)
    target = strand_basis(target_degrees, nu, nx)
    index = {b: k for k, b in enumerate(target)}
    columns_of = matrix.transpose().entries
    raw: Dict[int, Dict[int, Dict[int, Any]]] = {}
    for row, (s, m) in enumerate(source):
        for t, entry in columns_of.get(s, {}).items():
            for monomial, coeff in entry.items():
                x_part = tuple(a + b for a, b in zip(m, monomial[:nx]))
                col = index.get((t, x_part))
                if col is None:
                    raise InputError(f"Map entry in position ({t}, {s}) is not of the expected degree.")
                t_power = monomial[nx] if family else 0
                cell = raw.setdefault(row, {}).setdefault(col, {})
                cell[t_power] = cell.get(t_power, ring.domain.zero) + coeff
    domain = ring.domain
    rows: Dict[int, Dict[int, Any]] = {}
    if family:
        uni = uni_ring(domain)
        for r, cols in raw.items():
            kept = {c: uni.from_dict({(e,): v for e, v in cell.items() if v}) for c, cell in cols.items()}
            kept = {c: v for c, v in kept.items() if v}
            if kept:
                rows[r] = kept
        return ExactMatrix(len(source), len(target), domain, rows, POLY_T)
    for r, cols in raw.items():
        kept = {c: cell[0] for c, cell in cols.items() if cell.get(0)}
        if kept:
            rows[r] = kept
    return ExactMatrix(len(source), len(target), domain, rows, FIELD)


@dataclass
class GradedComplex:
    """
    Bounded complex of graded free modules, indexed cohomologically.

    Args:
        ring: Polynomial ring context
        degrees: position p -> generator degrees of C^p
        maps: position p -> δ^p : C^p -> C^{p+1}
    """

    ring: Any
    degrees: Dict[int, List[int]]
    maps: Dict[int, PolyMatrix] = field(default_factory=dict)
    _ranks: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    def positions(self) -> List[int]:
        return sorted(self.degrees)

    def rank(self, p: int) -> int:
        return len(self.degrees.get(p, []))

    def validate(self) -> None:
        """Check shapes, degrees of entries and δ∘δ = 0."""
        nx = x_count(self.ring)
        for p, matrix in self.maps.items():
            if matrix.ncols != self.rank(p) or matrix.nrows != self.rank(p + 1):
                raise InputError(f"Map at position {p} has the wrong shape.")
            for t, row in matrix.entries.items():
                for s, entry in row.items():
                    expected = self.degrees[p][s] - self.degrees[p + 1][t]
                    for m in entry.keys():
                        if sum(m[:nx]) != expected:
                            raise InputError(f"Inconsistent grading at position {p}, entry ({t}, {s}).")
        for p in self.maps:
            if p + 1 in self.maps and not (self.maps[p + 1] @ self.maps[p]).is_zero():
                raise InvariantViolation(f"Composition of consecutive maps at position {p} is not zero.")

    def strand_dimension(self, p: int, nu: int) -> int:
        return len(strand_basis(self.degrees.get(p, []), nu, x_count(self.ring)))

    def strand(self, p: int, nu: int) -> ExactMatrix:
        """Matrix of δ^p on degree-nu strands (zero matrix when there is no map)."""
        source = self.degrees.get(p, [])
        target = self.degrees.get(p + 1, [])
        matrix = self.maps.get(p)
        if matrix is None:
            matrix = PolyMatrix(len(target), len(source), self.ring)
        return strand_matrix(matrix, source, target, nu)

    def strand_rank(self, p: int, nu: int) -> int:
        if p not in self.maps:
            return 0
        if (p, nu) not in self._ranks:
            self._ranks[(p, nu)] = rank(self.strand(p, nu))
            logger.debug(f"Strand rank of map {p} in degree {nu}: {self._ranks[(p, nu)]}")
        return self._ranks[(p, nu)]


def complex_cohomology_dims(complex_: GradedComplex, nu: int) -> Dict[int, int]:
    """
    dim_k H^p(K)_nu for every position p, by rank-nullity on the degree-nu strand.

    Args:
        complex_: Complex over a field
        nu: Internal degree

    Returns:
        position -> dimension
    """
    if has_parameter(complex_.ring):
        raise InputError("Strand dimensions over k need a complex over a field.")
    ranks = {p: complex_.strand_rank(p, nu) for p in complex_.positions()}
    return {
        p: complex_.strand_dimension(p, nu) - ranks.get(p, 0) - ranks.get(p - 1, 0)
        for p in complex_.positions()
    }


@dataclass
class FreeResolution:
    """
    F_L -> ... -> F_1 -> F_0 with d_k = differentials[k - 1] : F_k -> F_{k-1}.
    """

    ring: Any
    modules: List[List[int]]
    differentials: List[PolyMatrix] = field(default_factory=list)
    convention: str = IDEAL
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.differentials)

    def differential(self, k: int) -> PolyMatrix:
        return self.differentials[k - 1]

    def betti_table(self) -> BettiTable:
        return BettiTable.from_modules(self.modules, self.convention)

    def check_complex(self) -> None:
        """d_k ∘ d_{k+1} = 0 exactly."""
        for k in range(1, self.length):
            if not (self.differentials[k - 1] @ self.differentials[k]).is_zero():
                raise InvariantViolation(f"d_{k} ∘ d_{k + 1} is not zero.")

    def as_complex(self) -> GradedComplex:
        degrees = {-k: list(d) for k, d in enumerate(self.modules)}
        maps = {-k: self.differentials[k - 1] for k in range(1, self.length + 1)}
        return GradedComplex(self.ring, degrees, maps)

    def check_exactness(self, nu: int) -> None:
        """The degree-nu strand is exact away from F_0."""
        dims = complex_cohomology_dims(self.as_complex(), nu)
        for p, dim in dims.items():
            if p < 0 and dim:
                raise InvariantViolation(f"Resolution strand in degree {nu} has homology at F_{-p}.")


class DualComplex(GradedComplex):
    """Hom(F_., S): K^k = Hom(F_k, S) with twists negated and δ^k = d_{k+1}^T."""

    def __init__(self, resolution: FreeResolution):
        degrees = {k: [-d for d in module] for k, module in enumerate(resolution.modules)}
        maps = {k - 1: d.transpose() for k, d in enumerate(resolution.differentials, start=1)}
        super().__init__(resolution.ring, degrees, maps)
        self.resolution = resolution

    def cokernel_dimension(self, k: int, nu: int) -> int:
        """dim C^k_nu with C^k = coker(δ^{k-1})."""
        return self.strand_dimension(k, nu) - self.strand_rank(k - 1, nu)

    def cohomology_dims(self, nu: int) -> Dict[int, int]:
        """dim H^k(K)_nu = dim Ext^k(M, S)_nu, cross-checked against the cokernel relation."""
        dims = complex_cohomology_dims(self, nu)
        for k in self.positions():
            via_cokernels = (self.cokernel_dimension(k, nu) + self.cokernel_dimension(k + 1, nu)
                             - self.strand_dimension(k + 1, nu))
            if via_cokernels != dims[k]:
                raise InvariantViolation(
                    f"Cokernel relation fails for H^{k} in degree {nu}: {via_cokernels} != {dims[k]}"
                )
        return dims


def dual_complex(resolution: FreeResolution) -> DualComplex:
    return DualComplex(resolution)
