"""
Monomial orders and weight vectors.

A ``MonomialOrder`` is a hashable callable mapping an exponent tuple to a sort key, so it can be
handed to sympy as a ring order (``ring.clone(order=...)``) and used directly with ``max`` /
``sorted``. Larger key means larger monomial.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ..errors import InputError

LEX = "lex"
GREVLEX = "grevlex"
WEIGHT = "weight"


@dataclass(frozen=True)
class WeightVector:
    """Strictly positive integral weights ω, one per variable."""

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(w) for w in self.values))
        if not self.values:
            raise InputError("Weight vector must be nonempty.")
        if any(w < 1 for w in self.values):
            raise InputError(f"Weight vector entries must be >= 1, got {self.values}.")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.values)

    def degree(self, monomial: Sequence[int]) -> int:
        return weight_degree(self, monomial)


def weight_degree(omega, monomial: Sequence[int]) -> int:
    """
    The ω-degree μ(m)·ω of a monomial.

    Args:
        omega: WeightVector or integer sequence
        monomial: Exponent tuple of the same length

    Returns:
        Integer ω-degree
    """
    weights = omega.values if isinstance(omega, WeightVector) else tuple(omega)
    if len(weights) != len(monomial):
        raise InputError(
            f"Weight vector of length {len(weights)} applied to a monomial in "
            f"{len(monomial)} variables."
        )
    return sum(w * e for w, e in zip(weights, monomial))


@dataclass(frozen=True)
class MonomialOrder:
    """
    Total multiplicative order on monomials.

    kind is ``lex``, ``grevlex`` or ``weight``. Weight orders compare ω-degrees first and break
    ties with ``tiebreak`` (grevlex when omitted). ``priority`` permutes the variables for
    grevlex: the last listed variable is the cheapest one. Internal callers use nonnegative
    weights (elimination orders); user-facing weights are validated through ``WeightVector``.
    """

    kind: str = GREVLEX
    weights: Tuple[int, ...] = ()
    tiebreak: Optional["MonomialOrder"] = None
    priority: Tuple[int, ...] = field(default=())

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(LEX)

    @classmethod
    def grevlex(cls, priority: Sequence[int] = ()) -> "MonomialOrder":
        return cls(GREVLEX, priority=tuple(priority))

    @classmethod
    def weight(cls, omega, tiebreak: Optional["MonomialOrder"] = None) -> "MonomialOrder":
        values = omega.values if isinstance(omega, WeightVector) else tuple(int(w) for w in omega)
        return cls(WEIGHT, weights=values, tiebreak=tiebreak or cls.grevlex())

    @classmethod
    def elimination(cls, nvars: int, eliminate: Sequence[int]) -> "MonomialOrder":
        """Order whose first criterion is the total degree in the eliminated variables."""
        weights = tuple(1 if i in set(eliminate) else 0 for i in range(nvars))
        return cls(WEIGHT, weights=weights, tiebreak=cls.grevlex())

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """
        Parse ``lex``, ``grevlex``, ``weight 8,4,2,1`` or ``weight:8,4,2,1``.
        """
        label = text.strip().replace(":", " ")
        if label == LEX:
            return cls.lex()
        if label == GREVLEX:
            return cls.grevlex()
        if label.startswith(WEIGHT):
            raw = label[len(WEIGHT):].replace(" ", "")
            try:
                omega = WeightVector(tuple(int(w) for w in raw.split(",") if w))
            except ValueError as e:
                raise InputError(f"Bad weight order '{text}': {e}") from e
            return cls.weight(omega)
        raise InputError(f"Unknown monomial order '{text}'. Use lex, grevlex or weight w0,..,wN.")

    def __call__(self, monomial: Sequence[int]) -> Tuple:
        return self.key(monomial)

    def key(self, monomial: Sequence[int]) -> Tuple:
        if self.kind == LEX:
            return tuple(monomial)
        if self.kind == GREVLEX:
            if self.priority:
                monomial = tuple(monomial[i] for i in self.priority)
            return (sum(monomial), tuple(-e for e in reversed(monomial)))
        if self.kind == WEIGHT:
            if len(self.weights) != len(monomial):
                raise InputError(
                    f"Weight order on {len(self.weights)} variables applied to a monomial in "
                    f"{len(monomial)} variables."
                )
            degree = sum(w * e for w, e in zip(self.weights, monomial))
            return (degree, (self.tiebreak or MonomialOrder.grevlex()).key(monomial))
        raise InputError(f"Unknown monomial order kind '{self.kind}'.")

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        """
        Compare two monomials.

        Returns:
            -1, 0 or 1 for less, equal, greater
        """
        if len(a) != len(b):
            raise InputError(f"Cannot compare monomials in {len(a)} and {len(b)} variables.")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def weight_vector(self) -> Optional[WeightVector]:
        if self.kind != WEIGHT:
            return None
        return WeightVector(self.weights)

    def __str__(self) -> str:
        if self.kind == WEIGHT:
            return f"weight {','.join(str(w) for w in self.weights)}"
        return self.kind


def compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    return order.compare(a, b)
