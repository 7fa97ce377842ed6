"""
Hilbert series of monomial ideals and graded modules.

The series of S/I is N(T)/(1-T)^n. N is computed by the pivot recursion

    N(I) = N(I + (x)) + T * N(I : x)

on a pivot variable x, memoized on the minimal generators. Base case: all generators but at
most one are pure powers. Module series keep Laurent numerators, since twists can be negative.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from ..errors import InputError
from ..groebner.ideal import Ideal, initial_ideal
from ..groebner.monomial import MonomialIdeal, minimalize
from ..poly.polynomials import monomials_of_degree
from .numerical import NumericalPolynomial, count

logger = logging.getLogger(__name__)

Numerator = Dict[int, int]


def _clean(numerator: Numerator) -> Numerator:
    return {e: c for e, c in sorted(numerator.items()) if c}


def _multiply(a: Numerator, b: Numerator) -> Numerator:
    result: Numerator = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            result[e1 + e2] = result.get(e1 + e2, 0) + c1 * c2
    return _clean(result)


def _pure_power_numerator(exponents: Iterable[int]) -> Numerator:
    result: Numerator = {0: 1}
    for d in exponents:
        if d == 0:
            return {}
        result = _multiply(result, {0: 1, d: -1})
    return result


@dataclass(frozen=True)
class HilbertSeries:
    """
    HS(T) = N(T) / (1 - T)^n with a Laurent numerator N.

    Args:
        numerator: exponent -> integer coefficient
        nvars: number of variables n of the ambient polynomial ring
    """

    numerator: Dict[int, int] = field(default_factory=dict)
    nvars: int = 1

    def __post_init__(self):
        object.__setattr__(self, "numerator", _clean(dict(self.numerator)))

    def value(self, nu: int) -> int:
        """Hilbert function at nu."""
        return sum(c * count(nu - e, self.nvars) for e, c in self.numerator.items())

    def values(self, window: Iterable[int]) -> Dict[int, int]:
        return {nu: self.value(nu) for nu in window}

    def is_zero(self) -> bool:
        return not self.numerator

    def stabilization_degree(self) -> int:
        """The Hilbert function agrees with the Hilbert polynomial from this degree on."""
        if not self.numerator:
            return 0
        return max(self.numerator) - self.nvars + 1

    def initial_degree(self) -> Optional[int]:
        """Least degree of a nonzero graded piece (the numerator's lowest exponent)."""
        return min(self.numerator) if self.numerator else None

    def polynomial(self, variable: str = "m") -> NumericalPolynomial:
        """The Hilbert polynomial, fitted past the stabilization degree."""
        if not self.numerator:
            return NumericalPolynomial.zero(variable)
        start = self.stabilization_degree()
        points = [(nu, self.value(nu)) for nu in range(start, start + self.nvars + 1)]
        return NumericalPolynomial.from_values(points, max_degree=self.nvars - 1, variable=variable)

    def shifted(self, a: int) -> "HilbertSeries":
        """Series of M(-a): multiply by T^a."""
        return HilbertSeries({e + a: c for e, c in self.numerator.items()}, self.nvars)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        merged = dict(self.numerator)
        for e, c in other.numerator.items():
            merged[e] = merged.get(e, 0) + c
        return HilbertSeries(merged, self.nvars)

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries({e: -c for e, c in self.numerator.items()}, self.nvars)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-other)

    def dimension(self) -> int:
        """Krull dimension: degree of the Hilbert polynomial + 1 (0 for finite length, -1 for zero)."""
        if not self.numerator:
            return -1
        return self.polynomial().degree + 1


def free_module_series(degrees: Iterable[int], nvars: int) -> HilbertSeries:
    """Series of the graded free module with generators in the given degrees."""
    numerator: Numerator = {}
    for d in degrees:
        numerator[d] = numerator.get(d, 0) + 1
    return HilbertSeries(numerator, nvars)


def _is_base_case(gens: Tuple[Tuple[int, ...], ...]) -> bool:
    return sum(1 for g in gens if np.count_nonzero(g) > 1) <= 1


def _base_case(gens: Tuple[Tuple[int, ...], ...]) -> Numerator:
    powers = [g for g in gens if np.count_nonzero(g) <= 1]
    mixed = [g for g in gens if np.count_nonzero(g) > 1]
    numerator = _pure_power_numerator(sum(g) for g in powers)
    if mixed:
        m = mixed[0]
        quotient = []
        for g in powers:
            j = int(np.flatnonzero(g)[0])
            quotient.append(max(g[j] - m[j], 0))
        colon = _pure_power_numerator(quotient)
        shifted = {e + sum(m): c for e, c in colon.items()}
        for e, c in shifted.items():
            numerator[e] = numerator.get(e, 0) - c
    return _clean(numerator)


def _pivot_variable(gens: Tuple[Tuple[int, ...], ...]) -> int:
    mixed = np.array([g for g in gens if np.count_nonzero(g) > 1])
    return int(np.argmax(np.count_nonzero(mixed, axis=0)))


def monomial_numerator(ideal: MonomialIdeal, memo: Optional[Dict] = None) -> Numerator:
    """
    Numerator N(T) of the Hilbert series of S/I for a monomial ideal I.

    Args:
        ideal: Monomial ideal (zero ideal allowed)
        memo: Optional memo table shared across calls within one computation

    Returns:
        exponent -> coefficient
    """
    memo = {} if memo is None else memo
    return _numerator(ideal.generators, ideal.nvars, memo)


def _numerator(gens: Tuple[Tuple[int, ...], ...], nvars: int, memo: Dict) -> Numerator:
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if _is_base_case(gens):
        result = _base_case(gens)
    else:
        j = _pivot_variable(gens)
        unit = tuple(1 if i == j else 0 for i in range(nvars))
        added = minimalize(gens + (unit,))
        colon = minimalize(tuple(g[:j] + (max(g[j] - 1, 0),) + g[j + 1:] for g in gens))
        result = dict(_numerator(added, nvars, memo))
        for e, c in _numerator(colon, nvars, memo).items():
            result[e + 1] = result.get(e + 1, 0) + c
        result = _clean(result)
    memo[gens] = result
    return result


def monomial_series(ideal: MonomialIdeal) -> HilbertSeries:
    return HilbertSeries(monomial_numerator(ideal), ideal.nvars)


def hilbert_series(ideal) -> HilbertSeries:
    """Hilbert series of S/I, routed through the grevlex initial ideal for non-monomial I."""
    if isinstance(ideal, MonomialIdeal):
        return monomial_series(ideal)
    if not isinstance(ideal, Ideal):
        raise TypeError(f"Expected an Ideal or MonomialIdeal, got {type(ideal).__name__}")
    if ideal.has_parameter:
        raise InputError("Hilbert series are defined for ideals over a field, not families.")
    return monomial_series(initial_ideal(ideal))


def hilbert_function(ideal, nu: int) -> int:
    """dim_k [S/I]_nu (0 for nu < 0)."""
    if nu < 0:
        return 0
    return hilbert_series(ideal).value(nu)


def hilbert_polynomial(ideal, variable: str = "m") -> NumericalPolynomial:
    return hilbert_series(ideal).polynomial(variable)


def count_standard_monomials(ideal: MonomialIdeal, nu: int) -> int:
    """Brute-force oracle: number of degree-nu monomials outside the monomial ideal."""
    if nu < 0:
        return 0
    monomials = np.array(monomials_of_degree(ideal.nvars, nu), dtype=np.int64)
    if not ideal.generators:
        return len(monomials)
    gens = np.array(ideal.generators, dtype=np.int64)
    divisible = (monomials[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
    return int(np.count_nonzero(~divisible))
