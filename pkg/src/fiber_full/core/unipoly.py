"""
Univariate polynomials in the family parameter t.

Elements are sympy ``PolyElement`` objects of the ring k[t]. The helpers here pin down the
conventions the rest of the engine relies on: monic gcds, a sentinel degree for zero and
evaluation at a scalar.
"""

from functools import lru_cache
from typing import Any, Iterable, List, Tuple

from sympy.polys.rings import PolyRing

from ..settings import PARAMETER_NAME

# Degree of the zero polynomial.
ZERO_DEGREE = float("-inf")


@lru_cache(maxsize=None)
def uni_ring(domain) -> PolyRing:
    """The ring k[t] over the given field."""
    return PolyRing(PARAMETER_NAME, domain)


def uni_poly(coefficients: Iterable[Any], domain):
    """
    Build a polynomial from coefficients indexed by degree.

    Args:
        coefficients: c_0, c_1, ... (ints or field elements)
        domain: Coefficient field

    Returns:
        Element of k[t]
    """
    ring = uni_ring(domain)
    terms = {(d,): domain.convert(c) for d, c in enumerate(coefficients) if c}
    return ring.from_dict(terms)


def degree(f):
    """Degree in t; ``ZERO_DEGREE`` for the zero polynomial."""
    if not f:
        return ZERO_DEGREE
    return max(m[0] for m in f.keys())


def valuation(f) -> int:
    """Largest a with t^a dividing f (-1 for the zero polynomial)."""
    if not f:
        return -1
    return min(m[0] for m in f.keys())


def monic(f):
    if not f:
        return f
    return f.monic()


def uni_gcd(a, b):
    """Monic gcd of two univariate polynomials; gcd(0, 0) = 0."""
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    return monic(a.gcd(b))


def uni_lcm(a, b):
    if not a or not b:
        return a.ring.zero
    return monic(a.lcm(b))


def divmod_uni(a, b) -> Tuple[Any, Any]:
    """Euclidean division a = q*b + r with deg r < deg b."""
    q, r = a.div(b)
    return q, r


def divides(a, b) -> bool:
    """True iff a | b."""
    if not a:
        return not b
    return not b.rem(a)


def evaluate(f, alpha):
    """Value of f at t = alpha by Horner's rule."""
    domain = f.ring.domain
    alpha = domain.convert(alpha)
    coefficients = {m[0]: c for m, c in f.items()}
    value = domain.zero
    if not f:
        return value
    for d in range(int(degree(f)), -1, -1):
        value = value * alpha + coefficients.get(d, domain.zero)
    return value


def is_unit(f) -> bool:
    return bool(f) and degree(f) == 0


def squarefree_part(f):
    if not f or is_unit(f):
        return f.ring.one if f else f
    return monic(f.sqf_part())


def irreducible_factors(f) -> List[Any]:
    """Distinct monic irreducible factors of f, sorted canonically."""
    if not f or is_unit(f):
        return []
    _, factors = f.factor_list()
    result = {monic(g) for g, _ in factors if degree(g) > 0}
    return sorted(result, key=factor_sort_key)


def factor_sort_key(f) -> Tuple:
    """Sort by degree, then by canonical text."""
    return (degree(f), format_uni(f))


def shift_down(f, a: int):
    """f / t^a for f divisible by t^a."""
    return f.ring.from_dict({(m[0] - a,): c for m, c in f.items()})


def format_uni(f) -> str:
    """Canonical text such as ``t^2-t``."""
    from ..reports.polyformat import format_poly

    return format_poly(f).replace(" ", "")
