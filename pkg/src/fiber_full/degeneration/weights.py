"""
Weight vectors realising a monomial order on an ideal.

ω realises > on I when in_ω(g) = LT_>(g) for every element g of the reduced Groebner basis,
i.e. (μ(LT(g)) - μ(m))·ω >= 1 for every other monomial m of g. The system is solved over Q by
Fourier-Motzkin elimination, then scaled to integers.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from ..errors import InputError, InvariantViolation
from ..groebner.ideal import Ideal, initial_ideal
from ..groebner.monomial import MonomialIdeal
from ..poly.orders import MonomialOrder, WeightVector, weight_degree
from ..poly.polynomials import leading_monomial, omega_initial, to_ring

logger = logging.getLogger(__name__)

Constraint = Tuple[Tuple[Fraction, ...], Fraction]


def weight_constraints(ideal: Ideal, order: MonomialOrder) -> List[Constraint]:
    """c·ω >= 1 for every (lead, tail monomial) pair of the reduced basis, plus ω_i >= 1."""
    n = ideal.nvars
    constraints = set()
    for g in ideal.groebner(order):
        lead = leading_monomial(g, order)
        for m in g.keys():
            if tuple(m) == tuple(lead):
                continue
            constraints.add((tuple(Fraction(a - b) for a, b in zip(lead, m)), Fraction(1)))
    for i in range(n):
        unit = tuple(Fraction(1 if j == i else 0) for j in range(n))
        constraints.add((unit, Fraction(1)))
    return sorted(constraints)


def _normalize(constraint: Constraint) -> Constraint:
    coeffs, rhs = constraint
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale == 0:
        return constraint
    return tuple(c / scale for c in coeffs), rhs / scale


def _eliminate(system: List[Constraint], k: int) -> List[Constraint]:
    positive = [c for c in system if c[0][k] > 0]
    negative = [c for c in system if c[0][k] < 0]
    result = {_normalize(c) for c in system if c[0][k] == 0}
    for pc, pr in positive:
        for nc, nr in negative:
            a, b = -nc[k], pc[k]
            coeffs = tuple(a * x + b * y for x, y in zip(pc, nc))
            result.add(_normalize((coeffs, a * pr + b * nr)))
    return sorted(result)


def solve_constraints(system: Sequence[Constraint], n: int) -> Tuple[Fraction, ...]:
    """
    A rational point of {ω : c·ω >= rhs for all constraints}.

    Raises:
        InvariantViolation: if the system is infeasible
    """
    stages = {n - 1: list(system)}
    for k in range(n - 1, 0, -1):
        stages[k - 1] = _eliminate(stages[k], k)
    for coeffs, rhs in _eliminate(stages[0], 0):
        if not any(coeffs) and rhs > 0:
            raise InvariantViolation("Weight constraints are infeasible.")
    values: List[Fraction] = []
    for k in range(n):
        lower: Optional[Fraction] = None
        upper: Optional[Fraction] = None
        for coeffs, rhs in stages[k]:
            if coeffs[k] == 0:
                continue
            bound = (rhs - sum(c * v for c, v in zip(coeffs, values))) / coeffs[k]
            if coeffs[k] > 0:
                lower = bound if lower is None else max(lower, bound)
            else:
                upper = bound if upper is None else min(upper, bound)
        value = lower if lower is not None else Fraction(1)
        if upper is not None and value > upper:
            raise InvariantViolation(f"Back-substitution failed for ω_{k}.")
        values.append(value)
    return tuple(values)


def verify_weight(ideal: Ideal, order: MonomialOrder, omega: WeightVector) -> bool:
    """True iff ω strictly prefers the leading term of every reduced basis element."""
    for g in ideal.groebner(order):
        lead = leading_monomial(g, order)
        top = weight_degree(omega, lead)
        if any(weight_degree(omega, m) >= top for m in g.keys() if tuple(m) != tuple(lead)):
            return False
    return True


def special_fiber(ideal: Ideal, order: MonomialOrder, omega: WeightVector) -> MonomialIdeal:
    """The t = 0 fiber of hom_ω over the reduced basis, as a monomial ideal."""
    forms = [omega_initial(omega, to_ring(g, ideal.ring)) for g in ideal.groebner(order)]
    if any(len(f) != 1 for f in forms):
        raise InvariantViolation(f"ω = ({omega}) leaves a binomial in the special fiber.")
    return MonomialIdeal.from_polys(forms, ideal.nvars)


def realize_weight(ideal: Ideal, order: MonomialOrder,
                   logger: Optional[logging.Logger] = None) -> WeightVector:
    """
    Integral ω with in_ω(I) = in_>(I).

    Args:
        ideal: Ideal over a field
        order: The monomial order to realise

    Returns:
        WeightVector with entries >= 1, post-verified on the special fiber
    """
    logger = logger or logging.getLogger(__name__)
    if ideal.has_parameter:
        raise InputError("Weights are realised for ideals over a field, not families.")
    n = ideal.nvars
    point = solve_constraints(weight_constraints(ideal, order), n)
    scale = lcm(*(v.denominator for v in point))
    omega = WeightVector(tuple(int(v * scale) for v in point))
    if not verify_weight(ideal, order, omega):
        raise InvariantViolation(f"ω = ({omega}) does not realise {order}.")
    if special_fiber(ideal, order, omega) != initial_ideal(ideal, order):
        raise InvariantViolation(f"Special fiber for ω = ({omega}) differs from in_{order}(I).")
    logger.info(f"Weight vector for {order}: ({omega})")
    return omega
