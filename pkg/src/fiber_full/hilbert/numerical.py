"""
Numerical polynomials.

A numerical polynomial is stored by its integer coordinates in the basis C(m+i, i), i = 0..d.
Every integer combination of that basis is integer-valued on Z and every integer-valued
polynomial has integer coordinates, so integrality holds by construction.
"""

from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import sympy
from sympy.polys.polyfuncs import interpolate


def binomial(a: int, b: int) -> int:
    """C(a, b) with the counting convention: 0 unless 0 <= b <= a."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


def poly_binomial(x: int, k: int) -> int:
    """The polynomial C(x, k) = x(x-1)..(x-k+1)/k! evaluated at any integer x."""
    if k < 0:
        return 0
    numerator = 1
    for j in range(k):
        numerator *= x - j
    return numerator // factorial(k)


def count(d: int, n: int) -> int:
    """Number of monomials of degree d in n variables (0 for d < 0)."""
    if d < 0:
        return 0
    if n == 0:
        return 1 if d == 0 else 0
    return comb(d + n - 1, n - 1)


@dataclass(frozen=True)
class NumericalPolynomial:
    """
    P(m) = sum_i c_i * C(m+i, i) with integer c_i.

    The trailing coefficient is nonzero unless the polynomial is zero, so equality of instances
    is equality of polynomials.
    """

    coefficients: Tuple[int, ...] = ()
    variable: str = "m"

    def __post_init__(self):
        coeffs = [int(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    @classmethod
    def zero(cls, variable: str = "m") -> "NumericalPolynomial":
        return cls((), variable)

    @classmethod
    def constant(cls, c: int, variable: str = "m") -> "NumericalPolynomial":
        return cls((c,), variable)

    @classmethod
    def from_expr(cls, expr, symbol, variable: str = "m") -> "NumericalPolynomial":
        """
        Convert a sympy polynomial expression into the binomial basis.

        Raises:
            ValueError: if the expression is not an integer-valued polynomial
        """
        poly = sympy.Poly(sympy.expand(expr), symbol) if expr != 0 else None
        if poly is None or poly.is_zero:
            return cls.zero(variable)
        d = poly.degree()
        coeffs: List[int] = []
        for j in range(1, d + 2):
            value = poly.eval(-j)
            if not value.is_integer:
                raise ValueError(f"{expr} is not integer-valued at {-j}")
            partial = sum((-1) ** i * comb(j - 1, i) * coeffs[i] for i in range(j - 1))
            coeffs.append((-1) ** (j - 1) * (int(value) - partial))
        return cls(tuple(coeffs), variable)

    @classmethod
    def from_values(cls, points: Iterable[Tuple[int, int]], max_degree: Optional[int] = None,
                    variable: str = "m") -> "NumericalPolynomial":
        """
        Fit the polynomial through integer points.

        Args:
            points: (x, value) pairs with distinct x
            max_degree: Reject fits of larger degree

        Raises:
            ValueError: if the fitted polynomial is too large or not integer-valued
        """
        points = sorted((int(x), int(y)) for x, y in points)
        if not points:
            return cls.zero(variable)
        m = sympy.Symbol("m")
        expr = interpolate(points, m) if len(points) > 1 else sympy.Integer(points[0][1])
        result = cls.from_expr(expr, m, variable)
        if max_degree is not None and result.degree > max_degree:
            raise ValueError(f"Values are not those of a polynomial of degree <= {max_degree}")
        return result

    @property
    def degree(self) -> int:
        """Degree (-1 for the zero polynomial)."""
        return len(self.coefficients) - 1

    def __call__(self, x: int) -> int:
        return sum(c * poly_binomial(x + i, i) for i, c in enumerate(self.coefficients))

    def to_sympy(self, symbol=None):
        symbol = symbol if symbol is not None else sympy.Symbol(self.variable)
        terms = [c * sympy.expand_func(sympy.binomial(symbol + i, i))
                 for i, c in enumerate(self.coefficients)]
        return sympy.expand(sum(terms, sympy.Integer(0)))

    def renamed(self, variable: str) -> "NumericalPolynomial":
        return NumericalPolynomial(self.coefficients, variable)

    def __add__(self, other: "NumericalPolynomial") -> "NumericalPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        a = list(self.coefficients) + [0] * (size - len(self.coefficients))
        b = list(other.coefficients) + [0] * (size - len(other.coefficients))
        return NumericalPolynomial(tuple(x + y for x, y in zip(a, b)), self.variable)

    def __neg__(self) -> "NumericalPolynomial":
        return NumericalPolynomial(tuple(-c for c in self.coefficients), self.variable)

    def __sub__(self, other: "NumericalPolynomial") -> "NumericalPolynomial":
        return self + (-other)

    def scaled(self, k: int) -> "NumericalPolynomial":
        return NumericalPolynomial(tuple(k * c for c in self.coefficients), self.variable)

    def substitute(self, a: int, b: int) -> "NumericalPolynomial":
        """The polynomial m -> P(a*m + b)."""
        m = sympy.Symbol("m")
        return NumericalPolynomial.from_expr(self.to_sympy(m).subs(m, a * m + b), m, self.variable)

    def __str__(self) -> str:
        text = str(self.to_sympy(sympy.Symbol(self.variable)))
        return text.replace("**", "^").replace(" ", "")

    def __repr__(self) -> str:
        return f"NumericalPolynomial({self})"


def alternating_sum(polys: Sequence[NumericalPolynomial], variable: str = "m") -> NumericalPolynomial:
    total = NumericalPolynomial.zero(variable)
    for i, p in enumerate(polys):
        total = total + (p if i % 2 == 0 else -p)
    return total.renamed(variable)


def values_on(poly: NumericalPolynomial, window: Sequence[int]) -> Dict[int, int]:
    return {nu: poly(nu) for nu in window}
