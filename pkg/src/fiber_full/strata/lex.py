"""
Saturated lexicographic ideals L(λ) and their closed-form cohomology.

For λ with a_j parts equal to j and r >= λ_1:

    L(λ) = (x0^(a_r+1), x0^a_r x1^(a_{r-1}+1), ..., x0^a_r .. x_{r-3}^a_3 x_{r-2}^(a_2+1),
            x0^a_r .. x_{r-2}^a_2 x_{r-1}^a_1)

and λ = (r + 1) gives the zero ideal.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import QQ

from ..errors import InputError
from ..groebner.ideal import Ideal
from ..groebner.monomial import MonomialIdeal
from ..hilbert.numerical import binomial
from ..hilbert.partitions import IntegerPartition
from ..poly.polynomials import polynomial_ring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LexIdealData:
    partition: IntegerPartition
    r: int
    exponents: Tuple[int, ...]
    monomials: MonomialIdeal

    def ideal(self, domain=QQ) -> Ideal:
        ring = polynomial_ring(self.r + 1, domain)
        return Ideal(self.monomials.to_polys(ring), ring)

    def __str__(self) -> str:
        return f"L({self.partition}) in P^{self.r} = {self.monomials}"


def _is_full_space(partition: IntegerPartition, r: int) -> bool:
    return partition.parts == (r + 1,)


def lex_ideal(partition: IntegerPartition, r: int) -> LexIdealData:
    """
    The saturated lex ideal with Hilbert polynomial P_λ in k[x0..xr].

    Raises:
        InputError: if r < λ_1 and λ != (r + 1), or r < 1
    """
    if r < 1:
        raise InputError(f"Lex ideals need r >= 1, got {r}.")
    n = r + 1
    if _is_full_space(partition, r):
        return LexIdealData(partition, r, partition.exponents(r), MonomialIdeal(n, ()))
    if r < partition.largest:
        raise InputError(f"Partition {partition} needs r >= {partition.largest}, got r = {r}.")
    a = (0,) + partition.exponents(r)
    generators = []
    for k in range(r - 1):
        exponent = [0] * n
        for j in range(k):
            exponent[j] = a[r - j]
        exponent[k] = a[r - k] + 1
        generators.append(tuple(exponent))
    last = [0] * n
    for j in range(r - 1):
        last[j] = a[r - j]
    last[r - 1] = a[1]
    generators.append(tuple(last))
    data = LexIdealData(partition, r, a[1:], MonomialIdeal(n, tuple(generators)))
    logger.debug(f"{data}")
    return data


def lex_cohomology_closed_form(partition: IntegerPartition, r: int, nu: int) -> List[int]:
    """
    [h_0(ν), .., h_r(ν)] of V(L(λ)) from the binomial formulas (h_r is always 0).

    Binomials use the counting convention C(a, b) = 0 unless 0 <= b <= a.
    """
    if _is_full_space(partition, r):
        raise InputError("The closed form excludes λ = (r + 1).")
    a = (0,) + partition.exponents(r) + (0, 0)

    def tail_sum(start: int) -> int:
        return sum(a[start:r + 1])

    values = []
    h0 = sum(binomial(nu + part - i, nu - i + 1) for i, part in enumerate(partition.parts, start=1))
    h0 += binomial(tail_sum(1) - nu - 1, 1) - binomial(tail_sum(2) - nu - 1, 1)
    values.append(h0)
    for i in range(1, r):
        values.append(binomial(tail_sum(i + 1) - nu - 1, i + 1) - binomial(tail_sum(i + 2) - nu - 1, i + 1))
    values.append(0)
    return values


def lex_table(partition: IntegerPartition, r: int, window: Tuple[int, int]) -> List[List[int]]:
    """Closed-form rows h[i][ν - lo] on a window."""
    lo, hi = window
    columns = [lex_cohomology_closed_form(partition, r, nu) for nu in range(lo, hi + 1)]
    return [[column[i] for column in columns] for i in range(r + 1)]


def parse_partition(text: Optional[str]) -> IntegerPartition:
    if not text:
        raise InputError("A partition such as 2,1 is required.")
    return IntegerPartition.parse(text)
