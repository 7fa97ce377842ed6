"""
Polynomial ring contexts and the ω-operations.

Polynomials are sympy ``PolyElement`` objects, i.e. sparse maps from exponent tuples to field
elements with no zero coefficients stored. A ring context has the variables x0..xr and, for
families, a trailing parameter t of x-degree 0.
"""

import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.monomials import monomial_mul
from sympy.polys.rings import PolyRing

from ..errors import ExponentOverflowError, InputError
from ..settings import MAX_EXPONENT, PARAMETER_NAME, VARIABLE_PREFIX
from .orders import MonomialOrder, WeightVector, weight_degree

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


@lru_cache(maxsize=None)
def polynomial_ring(nvars: int, domain, parameter: bool = False,
                    order: Optional[MonomialOrder] = None) -> PolyRing:
    """
    The ring k[x0..x{nvars-1}] (optionally with a trailing parameter t).

    Args:
        nvars: Number of x-variables (r + 1)
        domain: Coefficient field
        parameter: Append the family parameter t
        order: Ring order used by sympy's division routines (lex when omitted)

    Returns:
        A sympy PolyRing
    """
    if nvars < 1:
        raise InputError("A polynomial ring needs at least one variable.")
    names = [f"{VARIABLE_PREFIX}{i}" for i in range(nvars)]
    if parameter:
        names.append(PARAMETER_NAME)
    if order is None:
        return PolyRing(names, domain)
    return PolyRing(names, domain, order)


def has_parameter(ring) -> bool:
    return str(ring.symbols[-1]) == PARAMETER_NAME


def x_count(ring) -> int:
    """Number of x-variables of a ring context."""
    return ring.ngens - 1 if has_parameter(ring) else ring.ngens


def base_ring(ring) -> PolyRing:
    """The ring context with the default (lex) order."""
    return polynomial_ring(x_count(ring), ring.domain, has_parameter(ring))


def order_ring(ring, order: MonomialOrder) -> PolyRing:
    """The same ring context with ``order`` driving leading terms and division."""
    return polynomial_ring(x_count(ring), ring.domain, has_parameter(ring), order)


def to_ring(f, ring):
    """Move f into another context with the same variables (order change only)."""
    if f.ring == ring:
        return f
    return ring.from_dict(dict(f))


def x_part(monomial: Sequence[int], ring) -> Monomial:
    return tuple(monomial[: x_count(ring)])


def x_degree(monomial: Sequence[int], ring) -> int:
    return sum(monomial[: x_count(ring)])


def total_degree(f) -> int:
    """Maximal x-degree of a term of f (-1 for zero)."""
    if not f:
        return -1
    return max(x_degree(m, f.ring) for m in f.keys())


def is_homogeneous(f) -> bool:
    """x-homogeneity (the parameter t has degree 0)."""
    degrees = {x_degree(m, f.ring) for m in f.keys()}
    return len(degrees) <= 1


def leading_term(f, order: MonomialOrder) -> Tuple[Monomial, object]:
    """Leading (monomial, coefficient) of a nonzero polynomial under ``order``."""
    return max(f.items(), key=lambda item: order(item[0]))


def leading_monomial(f, order: MonomialOrder) -> Monomial:
    return leading_term(f, order)[0]


def checked_monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    """Monomial product with the exponent range enforced."""
    m = monomial_mul(a, b)
    if m and max(m) > MAX_EXPONENT:
        raise ExponentOverflowError(f"Exponent overflow multiplying {a} by {b}.")
    return m


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent tuples of the given total degree, in lex-descending order."""
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    result = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            result.append((first,) + rest)
    return result


def omega_degree(omega: WeightVector, f) -> int:
    """deg_ω(f): the maximal ω-degree of a term of f."""
    return max(weight_degree(omega, x_part(m, f.ring)) for m in f.keys())


def omega_initial(omega: WeightVector, f):
    """
    in_ω(f): the sum of the terms of f of maximal ω-degree.

    Args:
        omega: Weight vector of length n
        f: Polynomial over k (no parameter)

    Returns:
        Polynomial in the same ring (zero for f = 0)
    """
    if not f:
        return f
    top = omega_degree(omega, f)
    return f.ring.from_dict(
        {m: c for m, c in f.items() if weight_degree(omega, x_part(m, f.ring)) == top}
    )


def omega_homogenize(omega: WeightVector, f, family_ring: Optional[PolyRing] = None):
    """
    hom_ω(f): each term x^α acquires t^(deg_ω(f) - deg_ω(x^α)).

    Args:
        omega: Weight vector of length n
        f: Polynomial over k
        family_ring: Target ring k[x, t]; derived from f's ring when omitted

    Returns:
        Polynomial in k[x, t]
    """
    if family_ring is None:
        family_ring = polynomial_ring(f.ring.ngens, f.ring.domain, True)
    if not f:
        return family_ring.zero
    top = omega_degree(omega, f)
    n = len(omega)
    terms = {}
    for m, c in f.items():
        terms[checked_monomial_mul(tuple(m) + (0,), (0,) * n + (top - weight_degree(omega, m),))] = c
    return family_ring.from_dict(terms)


def substitute_parameter(f, alpha, target_ring: Optional[PolyRing] = None):
    """
    Specialise a family polynomial at t = alpha.

    Args:
        f: Polynomial in k[x, t]
        alpha: Field element or integer
        target_ring: Ring k[x]; derived from f's ring when omitted

    Returns:
        Polynomial in k[x]
    """
    ring = f.ring
    if target_ring is None:
        target_ring = polynomial_ring(x_count(ring), ring.domain)
    domain = ring.domain
    alpha = domain.convert(alpha)
    terms: Dict[Monomial, object] = {}
    for m, c in f.items():
        value = c * alpha ** m[-1] if m[-1] else c
        if not value:
            continue
        key = tuple(m[:-1])
        terms[key] = terms.get(key, domain.zero) + value
    return target_ring.from_dict({m: c for m, c in terms.items() if c})


def lift_to_family(f, family_ring: PolyRing):
    """View a polynomial over k as a constant family in k[x, t]."""
    return family_ring.from_dict({tuple(m) + (0,): c for m, c in f.items()})


def term_count(polys: Iterable) -> int:
    return sum(len(f) for f in polys)
