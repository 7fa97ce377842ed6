"""
Vectors in graded free modules, module orders and module Groebner bases.

A vector of F = ⊕ S e_c is stored flat as a map (c, monomial) -> coefficient. Module orders
turn such a term into a sort key; larger keys are larger terms.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_lcm, monomial_mul

from ..errors import InputError
from ..groebner.monomial import MonomialIdeal
from ..hilbert.series import HilbertSeries, free_module_series, monomial_series
from ..poly.orders import MonomialOrder
from ..poly.polynomials import base_ring, checked_monomial_mul, is_homogeneous, x_count

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Term = Tuple[int, Monomial]
Vector = Dict[Term, Any]


class ModuleOrder(ABC):
    """A monomial order on the terms m * e_c of a free module."""

    @abstractmethod
    def key(self, component: int, monomial: Monomial) -> Tuple:
        ...

    def __call__(self, term: Term) -> Tuple:
        return self.key(*term)


class PositionOverTerm(ModuleOrder):
    """Compare components first (e_0 > e_1 > ...), then monomials."""

    def __init__(self, order: Optional[MonomialOrder] = None):
        self.order = order or MonomialOrder.grevlex()

    def key(self, component: int, monomial: Monomial) -> Tuple:
        return (-component, self.order(monomial))


class SchreyerOrder(ModuleOrder):
    """
    Order induced on F_{k+1} by a basis g_0, g_1, ... of a submodule of F_k.

    m e_j > m' e_i iff LT(m g_j) > LT(m' g_i), ties broken by the smaller index.
    """

    def __init__(self, previous: ModuleOrder, leads: Sequence[Term]):
        self.previous = previous
        self.leads = list(leads)
        self._cache: Dict[Term, Tuple] = {}

    def key(self, component: int, monomial: Monomial) -> Tuple:
        term = (component, monomial)
        cached = self._cache.get(term)
        if cached is None:
            lead_component, lead_monomial = self.leads[component]
            cached = (self.previous.key(lead_component, monomial_mul(monomial, lead_monomial)), -component)
            self._cache[term] = cached
        return cached


def vector_from_columns(column: Dict[int, Any]) -> Vector:
    """Flatten a component -> polynomial map."""
    vector: Vector = {}
    for c, poly in column.items():
        for m, coeff in poly.items():
            vector[(c, tuple(m))] = coeff
    return vector


def vector_to_column(vector: Vector, ring) -> Dict[int, Any]:
    grouped: Dict[int, Dict[Monomial, Any]] = {}
    for (c, m), coeff in vector.items():
        grouped.setdefault(c, {})[m] = coeff
    return {c: ring.from_dict(terms) for c, terms in sorted(grouped.items())}


def lead_term(vector: Vector, order: ModuleOrder) -> Term:
    return max(vector, key=order)


def add_scaled(target: Vector, source: Vector, coeff, monomial: Monomial) -> None:
    """target += coeff * x^monomial * source, in place."""
    for (c, m), value in source.items():
        term = (c, checked_monomial_mul(m, monomial))
        updated = target.get(term, 0) + coeff * value
        if updated:
            target[term] = updated
        else:
            target.pop(term, None)


def vector_degree(vector: Vector, degrees: Sequence[int], nx: int) -> int:
    """Degree of a homogeneous vector: x-degree of a term plus the twist of its component."""
    (c, m) = next(iter(vector))
    return sum(m[:nx]) + degrees[c]


def make_monic(vector: Vector, order: ModuleOrder, domain) -> Vector:
    lc = vector[lead_term(vector, order)]
    if lc == domain.one:
        return vector
    inverse = domain.quo(domain.one, lc)
    return {t: c * inverse for t, c in vector.items()}


class _Divisor:
    """Basis with leads indexed by component, for the division algorithm."""

    def __init__(self, basis: Sequence[Vector], order: ModuleOrder):
        self.basis = list(basis)
        self.leads = [lead_term(g, order) for g in self.basis]
        self.by_component: Dict[int, List[int]] = {}
        for k, (c, _) in enumerate(self.leads):
            self.by_component.setdefault(c, []).append(k)

    def find(self, term: Term) -> Optional[Tuple[int, Monomial]]:
        c, m = term
        for k in self.by_component.get(c, ()):
            quotient = monomial_div(m, self.leads[k][1])
            if quotient is not None:
                return k, quotient
        return None


def reduce_vector(vector: Vector, basis: Sequence[Vector], order: ModuleOrder, domain,
                  track: bool = False, divisor: Optional[_Divisor] = None):
    """
    Full reduction of a vector by a list of vectors.

    Args:
        vector: Vector to reduce (left untouched)
        basis: Divisors
        order: Module order
        domain: Coefficient field
        track: Also return the quotients

    Returns:
        remainder, or (remainder, quotients) with quotients[k][monomial] = coefficient such that
        vector = sum_k q_k * basis[k] + remainder
    """
    divisor = divisor or _Divisor(basis, order)
    work = dict(vector)
    remainder: Vector = {}
    quotients: Dict[int, Dict[Monomial, Any]] = {}
    while work:
        term = max(work, key=order)
        coeff = work[term]
        found = divisor.find(term)
        if found is None:
            remainder[term] = coeff
            del work[term]
            continue
        k, monomial = found
        g = divisor.basis[k]
        factor = domain.quo(coeff, g[divisor.leads[k]])
        add_scaled(work, g, -factor, monomial)
        if track:
            row = quotients.setdefault(k, {})
            value = row.get(monomial, 0) + factor
            if value:
                row[monomial] = value
            else:
                row.pop(monomial, None)
    if track:
        return remainder, quotients
    return remainder


def s_vector(f: Vector, g: Vector, order: ModuleOrder) -> Tuple[Vector, Monomial, Monomial]:
    """S-vector of two monic vectors with leads in the same component."""
    (_, mf), (_, mg) = lead_term(f, order), lead_term(g, order)
    lcm = monomial_lcm(mf, mg)
    a, b = monomial_div(lcm, mf), monomial_div(lcm, mg)
    result: Vector = {}
    add_scaled(result, f, 1, a)
    add_scaled(result, g, -1, b)
    return result, a, b


def module_groebner(vectors: Iterable[Vector], order: ModuleOrder, domain) -> List[Vector]:
    """
    Minimal Groebner basis of a submodule (Buchberger with the normal selection strategy).

    Args:
        vectors: Generators (zero vectors ignored)
        order: Module order
        domain: Coefficient field

    Returns:
        Monic vectors whose leads form a minimal generating set of the lead module
    """
    basis: List[Vector] = []
    for v in vectors:
        if v:
            r = reduce_vector(v, basis, order, domain) if basis else dict(v)
            if r:
                basis.append(make_monic(r, order, domain))
    leads = [lead_term(g, order) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i) if leads[i][0] == leads[j][0]}

    def lcm_key(pair):
        i, j = pair
        return (sum(monomial_lcm(leads[i][1], leads[j][1])), pair)

    while pairs:
        pair = min(pairs, key=lcm_key)
        pairs.discard(pair)
        i, j = pair
        s, _, _ = s_vector(basis[i], basis[j], order)
        r = reduce_vector(s, basis, order, domain) if s else {}
        if r:
            basis.append(make_monic(r, order, domain))
            leads.append(lead_term(basis[-1], order))
            k = len(basis) - 1
            pairs |= {(k, j2) for j2 in range(k) if leads[j2][0] == leads[k][0]}

    minimal = []
    for k, (c, m) in enumerate(leads):
        redundant = any(
            c2 == c and monomial_div(m, m2) is not None and (m2 != m or k2 < k)
            for k2, (c2, m2) in enumerate(leads) if k2 != k
        )
        if not redundant:
            minimal.append(basis[k])
    logger.debug(f"Module Groebner basis: {len(minimal)} elements from {len(basis)} candidates")
    return minimal


def lead_ideals(basis: Sequence[Vector], order: ModuleOrder, nvars: int) -> Dict[int, MonomialIdeal]:
    """Per-component monomial ideal of the leading terms."""
    gens: Dict[int, List[Monomial]] = {}
    for g in basis:
        c, m = lead_term(g, order)
        gens.setdefault(c, []).append(m)
    return {c: MonomialIdeal(nvars, tuple(ms)) for c, ms in gens.items()}


def quotient_series(degrees: Sequence[int], basis: Sequence[Vector], order: ModuleOrder,
                    nvars: int) -> HilbertSeries:
    """Hilbert series of F / M with F = ⊕ S(-degrees[c]) and M given by a Groebner basis."""
    leads = lead_ideals(basis, order, nvars)
    total = HilbertSeries({}, nvars)
    for c, d in enumerate(degrees):
        ideal = leads.get(c, MonomialIdeal(nvars, ()))
        total = total + monomial_series(ideal).shifted(d)
    return total


def submodule_series(degrees: Sequence[int], generators: Iterable[Vector], domain, nvars: int,
                     order: Optional[ModuleOrder] = None) -> HilbertSeries:
    """Hilbert series of the submodule of F generated by homogeneous vectors."""
    order = order or PositionOverTerm()
    basis = module_groebner(generators, order, domain)
    return free_module_series(degrees, nvars) - quotient_series(degrees, basis, order, nvars)


@dataclass
class GradedModule:
    """
    Cokernel of a homogeneous presentation F_1 -> F_0.

    Args:
        degrees: Generator degrees of F_0
        relations: Columns of the presentation matrix, as component -> polynomial maps
        ring: Polynomial ring context over a field
    """

    degrees: List[int]
    relations: List[Dict[int, Any]] = field(default_factory=list)
    ring: Any = None

    def __post_init__(self):
        self.ring = base_ring(self.ring)
        nx = x_count(self.ring)
        cleaned = []
        for column in self.relations:
            column = {c: p for c, p in column.items() if p}
            if not column:
                continue
            degree = None
            for c, p in column.items():
                if c < 0 or c >= len(self.degrees):
                    raise InputError(f"Relation component {c} outside the {len(self.degrees)} generators.")
                if not is_homogeneous(p):
                    raise InputError("Presentation entries must be homogeneous.")
                d = sum(next(iter(p.keys()))[:nx]) + self.degrees[c]
                if degree is not None and d != degree:
                    raise InputError("Presentation column is not homogeneous.")
                degree = d
            cleaned.append(column)
        self.relations = cleaned

    @property
    def nvars(self) -> int:
        return x_count(self.ring)

    def relation_vectors(self) -> List[Vector]:
        return [vector_from_columns(column) for column in self.relations]

    def hilbert_series(self, order: Optional[ModuleOrder] = None) -> HilbertSeries:
        order = order or PositionOverTerm()
        basis = module_groebner(self.relation_vectors(), order, self.ring.domain)
        return quotient_series(self.degrees, basis, order, self.nvars)
