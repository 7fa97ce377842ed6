"""
Minimization of graded free resolutions.

A unit u = d_k[r][c] links generator c of F_k to generator r of F_{k-1}. After the change of
basis that splits off the trivial summand S e_c -> S f_r:

    d_k'[a][b] = d_k[a][b] - d_k[a][c] * d_k[r][b] / u      (row r and column c removed)
    d_{k+1}'   = d_{k+1} with row c removed
    d_{k-1}'   = d_{k-1} with column r removed
"""

import logging
from typing import Any, Dict, List, Optional, Tuple

from .betti import BettiTable
from .complexes import FreeResolution, PolyMatrix

logger = logging.getLogger(__name__)

Entries = Dict[int, Dict[int, Any]]


def _is_unit(f) -> bool:
    return len(f) == 1 and not any(next(iter(f.keys())))


def _find_unit(entries: Entries) -> Optional[Tuple[int, int]]:
    for r in sorted(entries):
        for c in sorted(entries[r]):
            if _is_unit(entries[r][c]):
                return r, c
    return None


def _cancel(entries: Entries, r: int, c: int, ring) -> None:
    u = entries[r][c]
    inverse = ring.domain.quo(ring.domain.one, u.LC)
    pivot_row = {b: v * inverse for b, v in entries[r].items() if b != c}
    for a in list(entries):
        if a == r or c not in entries[a]:
            continue
        factor = entries[a][c]
        row = entries[a]
        for b, v in pivot_row.items():
            value = row.get(b, ring.zero) - factor * v
            if value:
                row[b] = value
            else:
                row.pop(b, None)
        row.pop(c, None)
        if not row:
            del entries[a]
    del entries[r]


def _drop_row(entries: Entries, r: int) -> None:
    entries.pop(r, None)


def _drop_column(entries: Entries, c: int) -> None:
    for a in list(entries):
        entries[a].pop(c, None)
        if not entries[a]:
            del entries[a]


def minimize(resolution: FreeResolution) -> Tuple[FreeResolution, BettiTable]:
    """
    Cancel every trivial summand linked by a unit entry.

    Args:
        resolution: A graded free resolution

    Returns:
        (minimal resolution, its Betti table)
    """
    ring = resolution.ring
    length = resolution.length
    mats: List[Entries] = [
        {i: dict(row) for i, row in d.entries.items()} for d in resolution.differentials
    ]
    alive = [set(range(len(m))) for m in resolution.modules]
    cancelled = 0
    for k in range(1, length + 1):
        while True:
            found = _find_unit(mats[k - 1])
            if found is None:
                break
            r, c = found
            _cancel(mats[k - 1], r, c, ring)
            _drop_column(mats[k - 1], c)
            if k < length:
                _drop_row(mats[k], c)
            if k >= 2:
                _drop_column(mats[k - 2], r)
            alive[k].discard(c)
            alive[k - 1].discard(r)
            cancelled += 1

    index = [{old: new for new, old in enumerate(sorted(a))} for a in alive]
    modules = [[resolution.modules[k][i] for i in sorted(alive[k])] for k in range(len(alive))]
    differentials = []
    for k in range(1, length + 1):
        entries: Entries = {}
        for r, row in mats[k - 1].items():
            if r not in index[k - 1]:
                continue
            kept = {index[k][c]: v for c, v in row.items() if c in index[k]}
            if kept:
                entries[index[k - 1][r]] = kept
        differentials.append(PolyMatrix(len(modules[k - 1]), len(modules[k]), ring, entries))

    while len(modules) > 1 and not modules[-1]:
        modules.pop()
        differentials.pop()
    minimal = FreeResolution(ring, modules, differentials, resolution.convention, minimal=True)
    logger.debug(f"Minimization cancelled {cancelled} trivial summands")
    return minimal, minimal.betti_table()
