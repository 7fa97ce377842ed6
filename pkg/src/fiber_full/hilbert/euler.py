"""The Euler characteristic polynomial P_h = sum_i (-1)^i h_i of a signature."""

import logging
from typing import Dict, Sequence, Tuple

from ..errors import InvariantViolation, WindowError
from .numerical import NumericalPolynomial

logger = logging.getLogger(__name__)


def euler_values(window: Tuple[int, int], h: Sequence[Sequence[int]]) -> Dict[int, int]:
    """Alternating sums sum_i (-1)^i h_i(nu) for every nu in the window."""
    lo, hi = window
    if lo > hi:
        raise WindowError(f"Empty window [{lo}, {hi}].")
    width = hi - lo + 1
    if any(len(row) != width for row in h):
        raise WindowError(f"Signature rows do not cover the window [{lo}, {hi}].")
    return {
        nu: sum((-1) ** i * row[nu - lo] for i, row in enumerate(h))
        for nu in range(lo, hi + 1)
    }


def euler_polynomial(signature) -> NumericalPolynomial:
    """
    Fit P_h to a cohomology signature.

    Args:
        signature: Object with ``window``, ``h`` and ``r`` attributes

    Returns:
        NumericalPolynomial of degree <= r

    Raises:
        InvariantViolation: if the alternating sum is not polynomial on the window
    """
    values = euler_values(signature.window, signature.h)
    try:
        poly = NumericalPolynomial.from_values(values.items(), max_degree=signature.r)
    except ValueError as e:
        raise InvariantViolation(f"Alternating sum of the signature is not a numerical polynomial: {e}") from e
    logger.debug(f"Euler polynomial on window {signature.window}: {poly}")
    return poly
