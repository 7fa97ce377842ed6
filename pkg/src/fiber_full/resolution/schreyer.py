"""
Schreyer resolutions.

Level one is a Groebner basis of the ideal (or of the relation module). Each further level is
the set of syzygies σ_ij = m_ij e_i - m_ji e_j - Σ q_k e_k read off standard representations of
S-vectors; by Schreyer's theorem they form a Groebner basis for the induced order. Each level is
sorted by (lead component, lead monomial lex-descending), which keeps the length within the
number of variables.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from sympy.polys.monomials import monomial_div, monomial_lcm

from ..errors import InputError, InvariantViolation
from ..groebner.ideal import Ideal
from ..poly.orders import MonomialOrder
from ..poly.polynomials import x_count
from .betti import IDEAL, MODULE
from .complexes import FreeResolution, PolyMatrix
from .minimize import minimize
from .modules import (
    GradedModule,
    ModuleOrder,
    PositionOverTerm,
    SchreyerOrder,
    Term,
    Vector,
    _Divisor,
    lead_term,
    module_groebner,
    reduce_vector,
    s_vector,
    vector_degree,
    vector_to_column,
)

logger = logging.getLogger(__name__)


def _sort_level(basis: List[Vector], order: ModuleOrder) -> List[Vector]:
    def key(g: Vector):
        c, m = lead_term(g, order)
        return (c, tuple(-e for e in m))

    return sorted(basis, key=key)


def _minimal_pairs(leads: List[Term]) -> List[Tuple[int, int, Tuple[int, ...]]]:
    """Pairs (i, j), i < j, whose syzygy leads m_ij e_i are minimal for each i."""
    pairs = []
    for i, (ci, mi) in enumerate(leads):
        candidates = []
        for j in range(i + 1, len(leads)):
            cj, mj = leads[j]
            if cj != ci:
                continue
            candidates.append((monomial_div(monomial_lcm(mi, mj), mi), j))
        for k, (m, j) in enumerate(candidates):
            redundant = any(
                monomial_div(m, m2) is not None and (m2 != m or j2 < j)
                for k2, (m2, j2) in enumerate(candidates) if k2 != k
            )
            if not redundant:
                pairs.append((i, j, m))
    return pairs


def _syzygies(basis: List[Vector], order: ModuleOrder, domain) -> List[Vector]:
    leads = [lead_term(g, order) for g in basis]
    divisor = _Divisor(basis, order)
    result = []
    for i, j, m_ij in _minimal_pairs(leads):
        s, a, b = s_vector(basis[i], basis[j], order)
        remainder, quotients = reduce_vector(s, basis, order, domain, track=True, divisor=divisor)
        if remainder:
            raise InvariantViolation(f"S-vector of basis elements {i} and {j} does not reduce to zero.")
        sigma: Vector = {(i, a): domain.one}
        sigma[(j, b)] = sigma.get((j, b), domain.zero) - domain.one
        for k, row in quotients.items():
            for monomial, coeff in row.items():
                value = sigma.get((k, monomial), domain.zero) - coeff
                if value:
                    sigma[(k, monomial)] = value
                else:
                    sigma.pop((k, monomial), None)
        result.append({t: c for t, c in sigma.items() if c})
    return result


def schreyer_resolution(source: Union[Ideal, GradedModule], order: Optional[MonomialOrder] = None,
                        logger: Optional[logging.Logger] = None) -> FreeResolution:
    """
    A (usually non-minimal) graded free resolution by Schreyer's method.

    Args:
        source: Homogeneous ideal (resolves S/I) or presented module
        order: Monomial order for the first Groebner basis (grevlex by default)

    Returns:
        FreeResolution with d∘d = 0
    """
    logger = logger or logging.getLogger(__name__)
    order = order or MonomialOrder.grevlex()
    module_order: ModuleOrder = PositionOverTerm(order)
    if isinstance(source, Ideal):
        if not source.homogeneous:
            raise InputError("Free resolutions need a homogeneous ideal.")
        ring = source.ring
        convention = IDEAL
        modules = [[0]]
        level = [{(0, tuple(m)): c for m, c in g.items()} for g in source.groebner(order)]
    else:
        ring = source.ring
        convention = MODULE
        modules = [list(source.degrees)]
        level = module_groebner(source.relation_vectors(), module_order, ring.domain)

    nx = x_count(ring)
    differentials: List[PolyMatrix] = []
    while level:
        level = _sort_level(level, module_order)
        degrees = [vector_degree(g, modules[-1], nx) for g in level]
        columns = [vector_to_column(g, ring) for g in level]
        differentials.append(PolyMatrix.from_columns(columns, len(modules[-1]), ring))
        modules.append(degrees)
        logger.debug(f"Schreyer level {len(differentials)}: {len(level)} generators")
        leads = [lead_term(g, module_order) for g in level]
        next_order = SchreyerOrder(module_order, leads)
        level = _syzygies(level, module_order, ring.domain)
        module_order = next_order
        if len(differentials) > ring.ngens + 1:
            raise InvariantViolation("Schreyer resolution exceeds the Hilbert syzygy bound.")

    resolution = FreeResolution(ring, modules, differentials, convention, minimal=False)
    resolution.check_complex()
    return resolution


def free_resolution(source: Union[Ideal, GradedModule], order: Optional[MonomialOrder] = None,
                    minimal: bool = True, logger: Optional[logging.Logger] = None) -> FreeResolution:
    """
    Graded free resolution of S/I (or of a presented module).

    Args:
        source: Homogeneous ideal or GradedModule
        order: Monomial order used for the first Groebner basis
        minimal: Cancel unit entries after the Schreyer construction

    Returns:
        FreeResolution of length at most the number of variables
    """
    logger = logger or logging.getLogger(__name__)
    resolution = schreyer_resolution(source, order, logger)
    if minimal:
        resolution, _ = minimize(resolution)
    if resolution.length > resolution.ring.ngens:
        raise InvariantViolation(
            f"Resolution of length {resolution.length} violates the Hilbert syzygy bound "
            f"({resolution.ring.ngens} variables)."
        )
    logger.info(f"Free resolution: ranks {[len(m) for m in resolution.modules]}")
    return resolution
