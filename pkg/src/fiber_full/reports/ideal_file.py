"""
Reader and writer for ideal and family files.

    # twisted cubic
    field Q
    ring x0..x3
    order lex
    x0*x2 - x1^2
    x0*x3 - x1*x2
    x1*x3 - x2^2

Header lines (``field``, ``ring``, ``order``) come first and ``ring`` is required. Every other
non-blank line is one generator. An ``intersect`` line starts a new block of generators and the
file's ideal is the intersection of all blocks. A generator mentioning ``t`` makes the file a
family file.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from tokenize import TokenError
from typing import List, Optional, Union

from sympy import Symbol
from sympy.polys.polyerrors import CoercionFailed
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..core.scalars import field_label, parse_field, same_field
from ..errors import ExponentOverflowError, FieldMismatchError, InputError, ParseError
from ..groebner.ideal import Ideal, ideal_intersect
from ..poly.orders import MonomialOrder
from ..poly.polynomials import polynomial_ring
from ..settings import MAX_EXPONENT, PARAMETER_NAME, VARIABLE_PREFIX
from .polyformat import format_poly

logger = logging.getLogger(__name__)

RING_PATTERN = re.compile(rf"^{VARIABLE_PREFIX}0\s*\.\.\s*{VARIABLE_PREFIX}(\d+)$")
ALLOWED = re.compile(r"^[0-9A-Za-z_+\-*/^() .]+$")
PARAMETER = re.compile(rf"\b{PARAMETER_NAME}\b")
TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass
class IdealFile:
    """A parsed ideal or family file."""

    ideal: Ideal
    path: Optional[str] = None
    order: Optional[MonomialOrder] = None
    comments: List[str] = field(default_factory=list)

    @property
    def is_family(self) -> bool:
        return self.ideal.has_parameter

    @property
    def field_name(self) -> str:
        return field_label(self.ideal.domain)


@dataclass
class _Line:
    number: int
    text: str


def _parse_generator(line: _Line, ring, path: Optional[str]):
    if not ALLOWED.match(line.text):
        raise ParseError(f"Unexpected character in '{line.text}'", path, line.number)
    names = {str(s): Symbol(str(s)) for s in ring.symbols}
    try:
        expr = parse_expr(line.text, local_dict=names, transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise ParseError(f"Cannot parse '{line.text}': {e}", path, line.number) from e
    unknown = sorted(str(s) for s in expr.free_symbols if str(s) not in names)
    if unknown:
        raise ParseError(f"Unknown variable(s) {', '.join(unknown)}", path, line.number)
    try:
        poly = ring.from_expr(expr)
    except (CoercionFailed, ValueError, ZeroDivisionError) as e:
        raise ParseError(f"'{line.text}' is not a polynomial over {field_label(ring.domain)}: {e}",
                         path, line.number) from e
    for monomial in poly.keys():
        if max(monomial, default=0) > MAX_EXPONENT:
            raise ExponentOverflowError(f"{path}:{line.number}: exponent exceeds {MAX_EXPONENT}")
    return poly


def parse_ideal_text(text: str, path: Optional[str] = None, field_override: Optional[str] = None,
                     logger: Optional[logging.Logger] = None) -> IdealFile:
    """
    Parse the contents of an ideal or family file.

    Args:
        text: File contents
        path: Used in error messages
        field_override: Field requested on the command line; must agree with a declared field

    Returns:
        IdealFile with the ideal (intersected over ``intersect`` blocks) and the declared order
    """
    logger = logger or logging.getLogger(__name__)
    domain = None
    nvars: Optional[int] = None
    order: Optional[MonomialOrder] = None
    comments: List[str] = []
    blocks: List[List[_Line]] = [[]]

    for number, raw in enumerate(text.splitlines(), start=1):
        content, _, comment = raw.partition("#")
        if comment.strip():
            comments.append(comment.strip())
        content = content.strip()
        if not content:
            continue
        keyword, _, rest = content.partition(" ")
        rest = rest.strip()
        header = keyword in ("field", "ring", "order")
        if header and any(blocks):
            raise ParseError(f"Header line '{keyword}' after the first generator", path, number)
        try:
            if keyword == "field":
                domain = parse_field(rest)
            elif keyword == "ring":
                match = RING_PATTERN.match(rest.replace(" ", ""))
                if not match:
                    raise ParseError(f"Expected 'ring {VARIABLE_PREFIX}0..{VARIABLE_PREFIX}N', got '{rest}'",
                                     path, number)
                nvars = int(match.group(1)) + 1
            elif keyword == "order":
                order = MonomialOrder.parse(rest)
            elif content == "intersect":
                if not blocks[-1]:
                    raise ParseError("'intersect' must follow at least one generator", path, number)
                blocks.append([])
            else:
                blocks[-1].append(_Line(number, content))
        except ParseError:
            raise
        except InputError as e:
            raise ParseError(str(e), path, number) from e

    if nvars is None:
        raise ParseError("Missing 'ring' header", path)
    if field_override is not None:
        requested = parse_field(field_override)
        if domain is not None and not same_field(domain, requested):
            raise FieldMismatchError(
                f"{path or 'input'}: file declares field {field_label(domain)} but {field_label(requested)} was requested"
            )
        domain = requested
    domain = domain or parse_field("Q")
    if blocks[-1] == [] and len(blocks) > 1:
        raise ParseError("'intersect' must be followed by generators", path)

    family = any(PARAMETER.search(line.text) for block in blocks for line in block)
    ring = polynomial_ring(nvars, domain, family)
    ideals = [Ideal([_parse_generator(line, ring, path) for line in block], ring) for block in blocks]
    ideal = ideals[0]
    for other in ideals[1:]:
        if family:
            raise ParseError("'intersect' is not supported in family files", path)
        ideal = ideal_intersect(ideal, other)
    if order is not None and order.weight_vector() is not None and len(order.weights) != nvars:
        raise ParseError(f"Weight order has {len(order.weights)} entries for {nvars} variables", path)
    logger.debug(f"Parsed {path or 'input'}: {len(ideal.generators)} generators in {nvars} variables")
    return IdealFile(ideal, path, order, comments)


def read_ideal_file(path: Union[str, Path], field_override: Optional[str] = None) -> IdealFile:
    """Read and parse an ideal or family file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"{path}: cannot read file ({e.strerror})") from e
    return parse_ideal_text(text, str(path), field_override)


def format_ideal_file(ideal: Ideal, order: Optional[MonomialOrder] = None,
                      comment: Optional[str] = None) -> str:
    """Text that parses back to the same ideal."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"field {field_label(ideal.domain)}")
    lines.append(f"ring {VARIABLE_PREFIX}0..{VARIABLE_PREFIX}{ideal.nvars - 1}")
    if order is not None:
        lines.append(f"order {order}")
    lines.extend(format_poly(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"
