"""
Buchberger's algorithm with Gebauer-Moeller pair elimination.

The pair bookkeeping (``update``) and the normal selection strategy follow the improved
algorithm of Becker-Weispfenning. All arithmetic happens in a sympy ring whose order is the
requested ``MonomialOrder``, so ``LM``, ``rem`` and ``monic`` follow that order.
"""

import logging
from typing import Iterable, List, Optional, Set, Tuple

from sympy.polys.groebnertools import spoly

from ..errors import InvariantViolation
from ..poly.orders import MonomialOrder
from ..poly.polynomials import total_degree, x_degree

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _interreduce(polys: List) -> List:
    """Monic list in which no term of any element is divisible by the leading monomial of another."""
    current = [p.monic() for p in polys if p]
    changed = True
    while changed:
        changed = False
        for i, p in enumerate(current):
            others = current[:i] + current[i + 1:]
            r = p.rem(others) if others else p
            if r != p:
                if r:
                    current[i] = r.monic()
                else:
                    del current[i]
                changed = True
                break
    return current


def buchberger(polys: Iterable, ring, degree_bound: Optional[int] = None) -> List:
    """
    Reduced Groebner basis of the ideal generated by ``polys``.

    Args:
        polys: Polynomials already living in ``ring``
        ring: sympy PolyRing whose order is the target monomial order
        degree_bound: Skip S-pairs whose lcm has x-degree above the bound (truncated basis)

    Returns:
        Monic, autoreduced basis sorted by degree ascending, then by leading monomial descending
    """
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    f = _interreduce(list(polys))
    if not f:
        return []
    index = {}
    for i, h in enumerate(f):
        index[h] = i

    def select(pairs: Set[Pair]) -> Pair:
        return min(pairs, key=lambda pair: (order(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)), pair))

    def normal(g, basis: List[int]) -> Optional[int]:
        h = g.rem([f[j] for j in basis])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return index[h]

    def update(basis: Set[int], pairs: Set[Pair], ih: int):
        mh = f[ih].LM
        candidates = set(basis)
        kept: Set[Pair] = set()
        while candidates:
            ig = candidates.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM)) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ip) for ip in candidates)
                and not any(lcm_divides(pair[1]) for pair in kept)
            ):
                kept.add((ih, ig))

        fresh = {
            (a, b) for a, b in kept
            if monomial_mul(mh, f[b].LM) != monomial_lcm(mh, f[b].LM)
        }

        surviving: Set[Pair] = set()
        for ig1, ig2 in pairs:
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                surviving.add((ig1, ig2))
        surviving |= fresh

        new_basis = {ig for ig in basis if monomial_div(f[ig].LM, mh) is None}
        new_basis.add(ih)
        return new_basis, surviving

    basis: Set[int] = set()
    pairs: Set[Pair] = set()
    for ih in sorted(range(len(f)), key=lambda i: order(f[i].LM)):
        basis, pairs = update(basis, pairs, ih)

    reductions_to_zero = 0
    skipped = 0
    while pairs:
        ig1, ig2 = select(pairs)
        pairs.remove((ig1, ig2))
        if degree_bound is not None:
            lcm = monomial_lcm(f[ig1].LM, f[ig2].LM)
            if x_degree(lcm, ring) > degree_bound:
                skipped += 1
                continue
        s = spoly(f[ig1], f[ig2], ring)
        ordered = sorted(basis, key=lambda g: order(f[g].LM))
        ih = normal(s, ordered)
        if ih is None:
            reductions_to_zero += 1
        else:
            basis, pairs = update(basis, pairs, ih)

    reduced = []
    for ig in basis:
        ih = normal(f[ig], sorted(basis - {ig}))
        if ih is None:
            raise InvariantViolation("A Groebner basis element reduced to zero during autoreduction.")
        reduced.append(f[ih])

    logger.debug(
        f"Buchberger: {len(reduced)} basis elements, {reductions_to_zero} pairs reduced to zero, "
        f"{skipped} pairs above the degree bound"
    )
    return sort_basis(reduced, order)


def sort_basis(basis: List, order: MonomialOrder) -> List:
    """Deterministic ordering: degree ascending, then leading monomial descending."""
    by_lead = sorted(basis, key=lambda g: order(g.LM), reverse=True)
    return sorted(by_lead, key=total_degree)
