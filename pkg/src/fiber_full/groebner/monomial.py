"""Monomial ideals by their minimal generators."""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.monomials import monomial_div, monomial_lcm

Monomial = Tuple[int, ...]


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the monomial a divides b."""
    return all(x <= y for x, y in zip(a, b))


def minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Drop every monomial divisible by another one; sorted by degree, then lex descending."""
    unique = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), tuple(-e for e in m)))
    kept: List[Monomial] = []
    for m in unique:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """
    Monomial ideal in ``nvars`` variables with minimal generators.

    The zero ideal has no generators; the unit ideal is generated by the zero exponent vector.
    """

    nvars: int
    generators: Tuple[Monomial, ...] = ()

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.nvars:
                raise ValueError(f"Monomial {g} does not have {self.nvars} exponents.")
        object.__setattr__(self, "generators", minimalize(self.generators))

    @classmethod
    def from_polys(cls, polys: Iterable, nvars: int) -> "MonomialIdeal":
        gens = []
        for f in polys:
            if len(f) != 1:
                raise ValueError("Monomial ideal generators must be single terms.")
            gens.append(tuple(next(iter(f.keys()))[:nvars]))
        return cls(nvars, tuple(gens))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.generators)

    def contains(self, monomial: Sequence[int]) -> bool:
        return any(divides(g, monomial) for g in self.generators)

    def is_squarefree(self) -> bool:
        """Every minimal generator has all exponents <= 1 (vacuous for the zero ideal)."""
        return all(e <= 1 for g in self.generators for e in g)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        gens = [monomial_lcm(a, b) for a in self.generators for b in other.generators]
        return MonomialIdeal(self.nvars, tuple(gens))

    def colon_monomial(self, monomial: Sequence[int]) -> "MonomialIdeal":
        """I : m for a monomial m."""
        gens = []
        for g in self.generators:
            lcm = monomial_lcm(g, tuple(monomial))
            gens.append(monomial_div(lcm, tuple(monomial)))
        return MonomialIdeal(self.nvars, tuple(gens))

    def add(self, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.generators + tuple(tuple(m) for m in monomials))

    def to_polys(self, ring) -> List:
        pad = (0,) * (ring.ngens - self.nvars)
        return [ring.from_dict({tuple(g) + pad: ring.domain.one}) for g in self.generators]

    def __str__(self) -> str:
        if not self.generators:
            return "(0)"
        names = [f"x{i}" for i in range(self.nvars)]
        pieces = []
        for g in self.generators:
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, g) if e]
            pieces.append("*".join(factors) or "1")
        return "(" + ", ".join(pieces) + ")"


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return ideal.is_squarefree()
