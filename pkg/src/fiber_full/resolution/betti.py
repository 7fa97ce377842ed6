"""
Betti tables.

Tables of S/I use the ideal convention: row i counts the generators of F_{i+1}, so β_{0,j}
counts the minimal generators of I in degree j. Tables of presented modules index F_i directly.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import pandas as pd

IDEAL = "ideal"
MODULE = "module"


@dataclass
class BettiTable:
    """β_{i,j}: homological index i -> internal degree j -> count."""

    betti: Dict[int, Dict[int, int]] = field(default_factory=dict)
    convention: str = IDEAL

    @classmethod
    def from_modules(cls, modules: Sequence[Sequence[int]], convention: str = IDEAL) -> "BettiTable":
        """
        Build the table from the generator degrees of F_0, F_1, ...

        Args:
            modules: Generator degrees per homological position
            convention: ``ideal`` (skip F_0 = S, shift indices by one) or ``module``
        """
        offset = 1 if convention == IDEAL else 0
        betti: Dict[int, Dict[int, int]] = {}
        for k, degrees in enumerate(modules[offset:]):
            if degrees:
                betti[k] = dict(sorted(Counter(degrees).items()))
        return cls(betti, convention)

    def get(self, i: int, j: int) -> int:
        return self.betti.get(i, {}).get(j, 0)

    def is_empty(self) -> bool:
        return not any(self.betti.values())

    def regularity(self) -> int:
        """
        Castelnuovo-Mumford regularity.

        Ideal convention: reg(S/I) = max{j - i} - 1 (0 for the zero ideal).
        Module convention: max{j - i}.
        """
        spread = [j - i for i, row in self.betti.items() for j in row]
        if not spread:
            return 0
        top = max(spread)
        return top - 1 if self.convention == IDEAL else top

    def last_index(self) -> int:
        """Largest homological index with a nonzero entry (-1 when empty)."""
        rows = [i for i, row in self.betti.items() if row]
        return max(rows) if rows else -1

    def projective_dimension(self) -> int:
        """pd of S/I (ideal convention) or of the module."""
        last = self.last_index()
        if self.convention == IDEAL:
            return last + 1
        return max(last, 0)

    def cm_type(self) -> int:
        """Sum of the last row: the Cohen-Macaulay type when the quotient is CM."""
        last = self.last_index()
        if last < 0:
            return 1
        return sum(self.betti[last].values())

    def total_ranks(self) -> List[int]:
        last = self.last_index()
        return [sum(self.betti.get(i, {}).values()) for i in range(last + 1)]

    def to_dataframe(self) -> pd.DataFrame:
        """Aligned table with rows j - i and columns i, as Macaulay-style Betti diagrams."""
        if self.is_empty():
            return pd.DataFrame()
        columns = list(range(self.last_index() + 1))
        shifts = sorted({j - i for i, row in self.betti.items() for j in row})
        data = {i: [self.get(i, s + i) for s in shifts] for i in columns}
        frame = pd.DataFrame(data, index=shifts)
        frame.index.name = "j-i"
        return frame

    def to_text(self) -> str:
        frame = self.to_dataframe()
        if frame.empty:
            return "(empty Betti table)"
        return frame.replace(0, "-").to_string()

    def to_json(self) -> Dict[str, Dict[str, Dict[str, int]]]:
        return {
            "betti": {
                str(i): {str(j): c for j, c in sorted(row.items())}
                for i, row in sorted(self.betti.items()) if row
            }
        }


def regularity(table: BettiTable) -> int:
    return table.regularity()
