"""
Ideals and the ideal-theoretic toolkit.

An ``Ideal`` keeps its generators in the ring context with the default order and caches one
reduced Groebner basis per monomial order. Basis elements live in the ordered ring context
(see ``order_ring``), so their ``LM`` is the leading monomial for that order.
"""

import hashlib
import logging
import threading
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyRing

from ..errors import InputError
from ..poly.orders import MonomialOrder
from ..poly.polynomials import base_ring, has_parameter, is_homogeneous, order_ring, to_ring, x_count
from ..reports.polyformat import format_poly
from .buchberger import buchberger
from .monomial import MonomialIdeal

logger = logging.getLogger(__name__)

GREVLEX = MonomialOrder.grevlex()


class Ideal:
    """
    Homogeneous or inhomogeneous ideal of k[x0..xr] (or of k[x0..xr, t] for families).
    """

    def __init__(self, generators: Iterable, ring: PolyRing, logger: Optional[logging.Logger] = None):
        self.ring = base_ring(ring)
        self.generators = [to_ring(g, self.ring) for g in generators if g]
        self.logger = logger or logging.getLogger(__name__)
        self.saturated: Optional[bool] = None
        self._groebner: Dict[Tuple[MonomialOrder, Optional[int]], List] = {}
        self._lock = threading.Lock()

    @property
    def domain(self):
        return self.ring.domain

    @property
    def nvars(self) -> int:
        """Number of x-variables n = r + 1."""
        return x_count(self.ring)

    @property
    def r(self) -> int:
        return self.nvars - 1

    @property
    def has_parameter(self) -> bool:
        return has_parameter(self.ring)

    @property
    def homogeneous(self) -> bool:
        return all(is_homogeneous(g) for g in self.generators)

    def groebner(self, order: Optional[MonomialOrder] = None, degree_bound: Optional[int] = None) -> List:
        """Cached reduced Groebner basis for ``order`` (grevlex by default)."""
        order = order or GREVLEX
        key = (order, degree_bound)
        cached = self._groebner.get(key)
        if cached is not None:
            return cached
        ring = order_ring(self.ring, order)
        basis = buchberger([to_ring(g, ring) for g in self.generators], ring, degree_bound)
        self.logger.debug(f"Groebner basis for order {order}: {len(basis)} elements")
        with self._lock:
            return self._groebner.setdefault(key, basis)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        basis = self.groebner()
        return len(basis) == 1 and basis[0] == basis[0].ring.one

    def contains(self, f) -> bool:
        return not normal_form(f, self)

    def same_ideal(self, other: "Ideal") -> bool:
        """Equality of ideals by comparing reduced grevlex bases."""
        if self.ring.symbols != other.ring.symbols:
            return False
        mine = [dict(g) for g in self.groebner()]
        theirs = [dict(g) for g in other.groebner()]
        return mine == theirs

    def canonical_text(self) -> str:
        return "\n".join(format_poly(g, GREVLEX) for g in self.groebner())

    def digest(self) -> str:
        """SHA-256 of the canonical grevlex basis text."""
        return hashlib.sha256(self.canonical_text().encode("utf-8")).hexdigest()

    def with_generators(self, generators: Iterable) -> "Ideal":
        return Ideal(generators, self.ring, self.logger)

    def __repr__(self) -> str:
        gens = ", ".join(format_poly(g) for g in self.generators)
        return f"Ideal({gens})"


def reduced_groebner(ideal: Ideal, order: Optional[MonomialOrder] = None) -> List:
    """
    Reduced Groebner basis of an ideal.

    Args:
        ideal: The ideal
        order: Monomial order (grevlex when omitted)

    Returns:
        Monic autoreduced basis sorted by (degree, order); empty for the zero ideal
    """
    return ideal.groebner(order)


def normal_form(f, ideal: Ideal, order: Optional[MonomialOrder] = None):
    """Remainder of f on division by the reduced basis, returned in the ideal's ring."""
    order = order or GREVLEX
    ring = order_ring(ideal.ring, order)
    remainder = to_ring(f, ring).rem(ideal.groebner(order)) if ideal.generators else to_ring(f, ring)
    return to_ring(remainder, ideal.ring)


def initial_ideal(ideal: Ideal, order: Optional[MonomialOrder] = None) -> MonomialIdeal:
    """in_>(I): the leading monomials of the reduced basis."""
    basis = ideal.groebner(order)
    return MonomialIdeal(ideal.ring.ngens, tuple(tuple(g.LM) for g in basis))


def monomial_ideal_to_ideal(monomials: MonomialIdeal, ring: PolyRing) -> Ideal:
    return Ideal(monomials.to_polys(base_ring(ring)), ring)


def _require_homogeneous(ideal: Ideal, what: str) -> None:
    if not ideal.homogeneous:
        raise InputError(f"{what} needs a homogeneous ideal.")


def _divide_out_variable(g, i: int, steps: Optional[int] = None):
    """g / x_i^e with e the full x_i-power of g (capped at ``steps``)."""
    e = min(m[i] for m in g.keys())
    if steps is not None:
        e = min(e, steps)
    if e == 0:
        return g
    return g.ring.from_dict({m[:i] + (m[i] - e,) + m[i + 1:]: c for m, c in g.items()})


def _cheapest_last(ideal: Ideal, i: int) -> MonomialOrder:
    order = [j for j in range(ideal.ring.ngens) if j != i] + [i]
    return MonomialOrder.grevlex(priority=order)


def colon_variable(ideal: Ideal, i: int) -> Ideal:
    """
    I : x_i for homogeneous I.

    With x_i the cheapest variable of a grevlex order, dividing each basis element by x_i once
    (when possible) gives a basis of I : x_i.
    """
    _require_homogeneous(ideal, "Colon by a variable")
    basis = ideal.groebner(_cheapest_last(ideal, i))
    return ideal.with_generators(_divide_out_variable(g, i, 1) for g in basis)


def saturate_variable(ideal: Ideal, i: int) -> Ideal:
    """I : x_i^inf by iterating the colon by x_i until it stabilises."""
    _require_homogeneous(ideal, "Saturation")
    basis = ideal.groebner(_cheapest_last(ideal, i))
    current = list(basis)
    rounds = 0
    while any(min(m[i] for m in g.keys()) > 0 for g in current):
        current = [_divide_out_variable(g, i, 1) for g in current]
        rounds += 1
    logger.debug(f"Saturation by x{i} stabilised after {rounds} colon steps")
    return ideal.with_generators(current)


def saturate_irrelevant(ideal: Ideal) -> Ideal:
    """
    I : m^inf with m = (x0, .., xr), computed as the intersection of the I : x_i^inf.

    Args:
        ideal: Homogeneous ideal over k

    Returns:
        Saturated ideal containing I (flagged ``saturated = True``)
    """
    _require_homogeneous(ideal, "Saturation by the irrelevant ideal")
    if ideal.is_zero() or ideal.is_unit():
        result = ideal.with_generators(ideal.generators)
        result.saturated = True
        return result
    pieces = []
    for i in range(ideal.nvars):
        piece = saturate_variable(ideal, i)
        if piece.same_ideal(ideal):
            ideal.saturated = True
            ideal.logger.debug(f"Ideal already saturated (I : x{i}^inf = I)")
            return ideal
        pieces.append(piece)
    result = pieces[0]
    for piece in pieces[1:]:
        result = ideal_intersect(result, piece)
    result = result.with_generators(result.groebner())
    result.saturated = True
    ideal.saturated = result.same_ideal(ideal)
    ideal.logger.debug(f"Saturation: {len(ideal.generators)} -> {len(result.generators)} generators")
    return result


def _is_monomial_ideal(ideal: Ideal) -> bool:
    return all(len(g) == 1 for g in ideal.generators)


def _extended_ring(ring: PolyRing) -> Tuple[PolyRing, int]:
    """Ring with one extra variable eliminated first."""
    s = ring.ngens
    order = MonomialOrder.elimination(s + 1, [s])
    names = [str(x) for x in ring.symbols] + ["_s"]
    return PolyRing(names, ring.domain, order), s


def ideal_intersect(first: Ideal, second: Ideal) -> Ideal:
    """
    I ∩ J via elimination of s from s*I + (1 - s)*J.

    Args:
        first: Ideal I
        second: Ideal J in the same ring

    Returns:
        The intersection as an Ideal with a reduced grevlex basis as generators
    """
    if first.ring.symbols != second.ring.symbols:
        raise InputError("Cannot intersect ideals from different rings.")
    if first.is_zero() or second.is_zero():
        return first.with_generators([])
    if _is_monomial_ideal(first) and _is_monomial_ideal(second):
        nvars = first.ring.ngens
        a = MonomialIdeal.from_polys(first.generators, nvars)
        b = MonomialIdeal.from_polys(second.generators, nvars)
        return first.with_generators(a.intersect(b).to_polys(first.ring))

    ring, s = _extended_ring(first.ring)
    s_var = ring.gens[s]

    def lift(f):
        return ring.from_dict({tuple(m) + (0,): c for m, c in f.items()})

    polys = [s_var * lift(f) for f in first.generators]
    polys += [(ring.one - s_var) * lift(g) for g in second.generators]
    basis = buchberger(polys, ring)
    kept = [
        first.ring.from_dict({tuple(m[:s]): c for m, c in g.items()})
        for g in basis if all(m[s] == 0 for m in g.keys())
    ]
    result = first.with_generators(kept)
    result = result.with_generators(result.groebner())
    return result


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    return first.with_generators(f * g for f in first.generators for g in second.generators)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    return first.with_generators(list(first.generators) + list(second.generators))


def colon(ideal: Ideal, f) -> Ideal:
    """
    I : f = (I ∩ (f)) / f.

    Raises:
        InputError: for f = 0
    """
    f = to_ring(f, ideal.ring)
    if not f:
        raise InputError("Colon by the zero polynomial is undefined.")
    meet = ideal_intersect(ideal, ideal.with_generators([f]))
    quotients = [g.exquo(f) for g in meet.generators]
    result = ideal.with_generators(quotients)
    return result.with_generators(result.groebner())


def eliminate(ideal: Ideal, variables: Sequence[int]) -> Ideal:
    """
    I ∩ k[remaining variables].

    Args:
        ideal: The ideal
        variables: Indices (into the ring's generators) of the variables to eliminate

    Returns:
        Ideal of the same ring generated by the basis elements free of those variables
    """
    variables = sorted(set(variables))
    order = MonomialOrder.elimination(ideal.ring.ngens, variables)
    basis = ideal.groebner(order)
    kept = [g for g in basis if all(m[v] == 0 for m in g.keys() for v in variables)]
    return ideal.with_generators(kept)
