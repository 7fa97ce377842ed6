"""
Exact coefficient fields.

The engine works over the rationals or over a prime field F_p. Both are sympy domains, so
rationals stay in lowest terms and residues stay in [0, p).
"""

from fractions import Fraction
from typing import Any, Union

from sympy import Integer, Rational
from sympy.ntheory import isprime
from sympy.polys.domains import GF, QQ

from ..errors import FieldMismatchError
from ..settings import MAX_PRIME


def make_field(characteristic: int = 0):
    """
    Return the coefficient field of the given characteristic.

    Args:
        characteristic: 0 for the rationals, otherwise a prime p < 2^31

    Returns:
        A sympy field domain (QQ or GF(p) with residues in [0, p))
    """
    if characteristic == 0:
        return QQ
    if characteristic < 0 or not isprime(characteristic):
        raise FieldMismatchError(f"Characteristic {characteristic} is not a prime.")
    if characteristic >= MAX_PRIME:
        raise FieldMismatchError(
            f"Prime {characteristic} is too large; prime fields require p < 2^31."
        )
    return GF(characteristic, symmetric=False)


def parse_field(text: str):
    """
    Parse a field label: ``Q``, ``F 32003``, ``F:32003`` or ``F32003``.

    Args:
        text: Field label from a file header or the command line

    Returns:
        The corresponding sympy domain
    """
    label = text.strip().replace(":", " ")
    if label.upper() in ("Q", "QQ"):
        return QQ
    if label[:1].upper() == "F":
        digits = label[1:].strip()
        if digits.isdigit():
            return make_field(int(digits))
    raise FieldMismatchError(f"Unknown field '{text}'. Use Q or F <prime>.")


def field_characteristic(domain) -> int:
    """Characteristic of a field domain (0 for QQ)."""
    return int(domain.characteristic())


def field_label(domain) -> str:
    """Canonical label used in reports: ``Q`` or ``F 32003``."""
    p = field_characteristic(domain)
    return "Q" if p == 0 else f"F {p}"


def same_field(a, b) -> bool:
    return field_characteristic(a) == field_characteristic(b)


def to_scalar(value: Union[int, Fraction, str], domain) -> Any:
    """
    Convert an integer, fraction or ``a/b`` string into a field element.

    Raises:
        FieldMismatchError: if the denominator vanishes in the field
    """
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        num, den = domain.convert(value.numerator), domain.convert(value.denominator)
        if not den:
            raise FieldMismatchError(
                f"Coefficient {value} is undefined in characteristic "
                f"{field_characteristic(domain)}."
            )
        return domain.quo(num, den)
    return domain.convert(value)


def to_rational(value, domain) -> Rational:
    """Exact sympy number for a field element (residues map to [0, p))."""
    return domain.to_sympy(value)


def to_int(value, domain) -> int:
    """Integer value of a field element that is known to be integral."""
    number = domain.to_sympy(value)
    if not isinstance(number, Integer):
        raise ValueError(f"{number} is not an integer")
    return int(number)
