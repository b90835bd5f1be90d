from dataclasses import dataclass, field
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class SpfTable:
    """Smallest-prime-factor table for 2 <= m <= limit"""
    limit: int
    spf: np.ndarray = field(repr=False)

    def smallest_factor(self, m: int) -> int:
        return int(self.spf[m])

    def is_prime(self, m: int) -> bool:
        return m >= 2 and int(self.spf[m]) == m

    def primes_below(self, x: int) -> np.ndarray:
        """All primes p < x (x - 1 must lie within the table)"""
        candidates = np.arange(2, x, dtype=np.int64)
        return candidates[self.spf[2:x] == candidates]


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization as (prime, exponent) pairs, primes increasing"""
    pairs: Tuple[Tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        result = 1
        for p, e in self.pairs:
            result *= p ** e
        return result

    def exponent(self, p: int) -> int:
        """v_p of the factored integer (0 when p does not divide it)"""
        for q, e in self.pairs:
            if q == p:
                return e
        return 0
