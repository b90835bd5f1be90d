from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Set, Tuple

import numpy as np


class CompatKind(Enum):
    """Which arithmetic relation a permutation must respect at every point"""
    LCM = "lcm"
    DIV = "div"
    ANTICOPRIME = "anticoprime"
    COPRIME = "coprime"

    @classmethod
    def from_name(cls, name: str) -> "CompatKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown compatibility kind {name!r}") from None


@dataclass(frozen=True)
class CompatMatrix:
    """0-1 compatibility relation on a finite ground set of positive integers.

    Row t holds the columns allowed for labels[t], packed as an int bitset
    (bit u set means labels[t] may map to labels[u]). For the standard
    matrices the ground set is [n] and `bound` is n; for s(a,b) the ground set
    is the divisor list and `bound` is a.
    """
    kind: CompatKind
    labels: Tuple[int, ...]
    bound: int
    rows: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def row_set(self, j: int) -> Set[int]:
        """Column labels allowed for label j"""
        t = self.labels.index(j)
        return {self.labels[u] for u in self._bits(self.rows[t])}

    def allows(self, j: int, jp: int) -> bool:
        t = self.labels.index(j)
        u = self.labels.index(jp)
        return bool((self.rows[t] >> u) & 1)

    def row_sizes(self) -> List[int]:
        return [bin(row).count("1") for row in self.rows]

    def to_array(self) -> np.ndarray:
        n = self.n
        array = np.zeros((n, n), dtype=np.int64)
        for t, row in enumerate(self.rows):
            for u in self._bits(row):
                array[t, u] = 1
        return array

    def as_dict(self) -> Dict[int, Set[int]]:
        return {j: self.row_set(j) for j in self.labels}

    @staticmethod
    def _bits(mask: int) -> Iterator[int]:
        u = 0
        while mask:
            if mask & 1:
                yield u
            mask >>= 1
            u += 1
