"""
Detaching a hypersurface: I = f I' with f the gcd of the generators.

With a = deg f, H = V(f) and X' = V(I') of codimension >= 2 in P^r (r >= 2), the sequence
0 -> S/I'(-a) -> S/I -> S/(f) -> 0 gives

    h_0(X)(ν)     = h_0(X')(ν - a) + dim [S/(f)]_ν
    h_i(X)(ν)     = h_i(X')(ν - a)                     1 <= i <= r - 2
    h_{r-1}(X)(ν) = C(a - ν - 1, r) - C(-ν - 1, r)
    h_r(X)(ν)     = 0
"""

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Any, List, Optional, Tuple

from ..cohomology.sheaf import CohomologySignature, sheaf_cohomology_table
from ..errors import InputError, InvariantViolation
from ..groebner.ideal import Ideal
from ..hilbert.numerical import binomial, count
from ..poly.polynomials import total_degree

logger = logging.getLogger(__name__)


@dataclass
class Detached:
    factor: Any
    residual: Ideal
    degree: int


def detach(ideal: Ideal) -> Detached:
    """
    Split off the gcd of the generators.

    Returns:
        Detached(f, I / f, deg f); f = 1 when the generators are coprime
    """
    ring = ideal.ring
    if ideal.is_zero():
        return Detached(ring.one, ideal, 0)
    f = reduce(lambda p, q: p.gcd(q), ideal.generators)
    f = f.monic()
    if f == ring.one:
        return Detached(ring.one, ideal, 0)
    residual = ideal.with_generators([g.exquo(f) for g in ideal.generators])
    degree = total_degree(f)
    logger.debug(f"Detached a factor of degree {degree}")
    return Detached(f, residual, degree)


def predicted_row(i: int, nu: int, r: int, degree: int, residual: CohomologySignature) -> int:
    """h_i(V(I))(ν) predicted from the residual signature."""
    n = r + 1
    if i == 0:
        return residual.value(0, nu - degree) + count(nu, n) - count(nu - degree, n)
    if i == r - 1:
        return binomial(degree - nu - 1, r) - binomial(-nu - 1, r)
    if i == r:
        return 0
    return residual.value(i, nu - degree)


def check_detach(ideal: Ideal, window: Optional[Tuple[int, int]] = None,
                 logger: Optional[logging.Logger] = None) -> Tuple[Detached, CohomologySignature, CohomologySignature]:
    """
    Compute both signatures and assert the detach relations on the window.

    Raises:
        InputError: for r < 2
        InvariantViolation: if a relation fails
    """
    logger = logger or logging.getLogger(__name__)
    if ideal.r < 2:
        raise InputError("The detach relations need r >= 2.")
    parts = detach(ideal)
    signature = sheaf_cohomology_table(ideal, window)
    residual = sheaf_cohomology_table(parts.residual)
    lo, hi = signature.window
    mismatches: List[Tuple[int, int]] = []
    if parts.degree > 0:
        for nu in range(lo, hi + 1):
            for i in range(ideal.r + 1):
                if signature.value(i, nu) != predicted_row(i, nu, ideal.r, parts.degree, residual):
                    mismatches.append((i, nu))
    if mismatches:
        raise InvariantViolation(f"Detach relations fail at (i, nu) = {mismatches[:5]}")
    logger.info(f"Detach relations hold on [{lo}, {hi}] for a factor of degree {parts.degree}")
    return parts, signature, residual
