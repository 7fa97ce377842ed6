"""
Canonical polynomial printing.

The output reparses under the ideal file grammar: terms joined by `` + `` / `` - ``, ``^`` for
powers and ``*`` between factors. The family parameter ``t`` is printed first in each monomial.
"""

from typing import Callable, Iterable, List, Optional, Sequence

from ..settings import PARAMETER_NAME


def format_monomial(exponents: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    ordered = sorted(range(len(names)), key=lambda i: (names[i] != PARAMETER_NAME, i))
    for i in ordered:
        e = exponents[i]
        if e == 0:
            continue
        factors.append(names[i] if e == 1 else f"{names[i]}^{e}")
    return "*".join(factors)


def format_coefficient(value, domain) -> str:
    return str(domain.to_sympy(value))


def format_poly(f, order: Optional[Callable] = None) -> str:
    """
    Print a polynomial canonically.

    Args:
        f: sympy PolyElement
        order: Optional monomial key; terms are printed from largest to smallest. Defaults to
            lex on the ring's variable order.

    Returns:
        Text such as ``x0*x2 - x1^2``
    """
    if not f:
        return "0"
    ring = f.ring
    names = [str(s) for s in ring.symbols]
    key = order if order is not None else (lambda m: m)
    terms = sorted(f.items(), key=lambda item: key(item[0]), reverse=True)

    pieces: List[str] = []
    for position, (monom, coeff) in enumerate(terms):
        text = format_coefficient(coeff, ring.domain)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        body = format_monomial(monom, names)
        if body:
            term = body if magnitude == "1" else f"{magnitude}*{body}"
        else:
            term = magnitude
        if position == 0:
            pieces.append(f"-{term}" if negative else term)
        else:
            pieces.append(f" - {term}" if negative else f" + {term}")
    return "".join(pieces)


def format_polys(polys: Iterable, order: Optional[Callable] = None) -> List[str]:
    return [format_poly(f, order) for f in polys]
