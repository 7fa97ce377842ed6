"""Integer partitions and their Hilbert polynomials P_λ."""

from dataclasses import dataclass
from typing import Iterator, Tuple

import sympy

from ..errors import InputError
from .numerical import NumericalPolynomial


@dataclass(frozen=True)
class IntegerPartition:
    """λ = (λ_1 >= ... >= λ_n) with positive parts."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise InputError("A partition needs at least one part.")
        if any(p < 1 for p in parts):
            raise InputError(f"Partition parts must be positive, got {parts}.")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InputError(f"Partition parts must be weakly decreasing, got {parts}.")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        try:
            return cls(tuple(int(p) for p in text.replace(" ", "").split(",") if p))
        except ValueError as e:
            raise InputError(f"Bad partition '{text}': {e}") from e

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def multiplicity(self, j: int) -> int:
        """a_j = #{i : λ_i = j}."""
        return sum(1 for p in self.parts if p == j)

    def exponents(self, r: int) -> Tuple[int, ...]:
        """(a_1, ..., a_r)."""
        return tuple(self.multiplicity(j) for j in range(1, r + 1))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)


def partition_polynomial(partition: IntegerPartition) -> NumericalPolynomial:
    """P_λ(m) = sum_i C(m + λ_i - i, λ_i - 1)."""
    m = sympy.Symbol("m")
    expr = sympy.Integer(0)
    for i, part in enumerate(partition.parts, start=1):
        expr += sympy.expand_func(sympy.binomial(m + part - i, part - 1))
    return NumericalPolynomial.from_expr(expr, m)


def partitions(total: int, max_part: int) -> Iterator[IntegerPartition]:
    """All partitions of ``total`` with parts <= max_part, largest parts first."""

    def build(remaining: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(cap, remaining), 0, -1):
            for rest in build(remaining - part, part):
                yield (part,) + rest

    for parts in build(total, max_part):
        yield IntegerPartition(parts)


def partitions_up_to(max_size: int, max_part: int) -> Iterator[IntegerPartition]:
    for total in range(1, max_size + 1):
        yield from partitions(total, max_part)
