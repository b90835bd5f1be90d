"""Ryser's formula with Gray-code column updates, compiled with numba.

perm(A) = (-1)^n * sum over column subsets S of (-1)^|S| * prod_i r_i(S),
where r_i(S) is the number of ones of row i inside S. Consecutive Gray codes
differ in one column, so each step is one row-sum update plus one product.

The alternating sum is evaluated modulo several primes just below 2^31 (all
products fit in int64) and recombined by the Chinese remainder theorem. The
permanent of a 0-1 matrix is at most the product of its row sums, so enough
primes are taken for their product to exceed that bound and the recombined
residue is the exact count.
"""

import math
from functools import lru_cache
from typing import List, Optional

import numba
import numpy as np
from numba import njit, prange
from sympy import prevprime
from sympy.ntheory.modular import crt

from .base_engine import PermanentEngine
from ..models.compat import CompatMatrix
from ..utils.config import Config

_MODULUS_CEILING = 2 ** 31


@njit(cache=True)
def _chunk_residues(matrix, start, stop, moduli, out):
    n = matrix.shape[0]
    m = moduli.shape[0]
    sums = np.zeros(n, dtype=np.int64)

    # seed the row sums from the Gray code of `start`
    subset = start ^ (start >> 1)
    size = 0
    for col in range(n):
        if (subset >> col) & 1:
            size += 1
            for row in range(n):
                sums[row] += matrix[row, col]
    for k in range(m):
        out[k] = 0

    g = start
    while g < stop:
        has_zero = False
        for row in range(n):
            if sums[row] == 0:
                has_zero = True
                break
        if not has_zero:
            for k in range(m):
                p = moduli[k]
                prod = 1
                for row in range(n):
                    prod = (prod * sums[row]) % p
                if size & 1:
                    out[k] = (out[k] + p - prod) % p
                else:
                    out[k] = (out[k] + prod) % p
        g += 1
        if g < stop:
            bit = 0
            t = g
            while (t & 1) == 0:
                t >>= 1
                bit += 1
            if (subset >> bit) & 1:
                for row in range(n):
                    sums[row] -= matrix[row, bit]
                size -= 1
            else:
                for row in range(n):
                    sums[row] += matrix[row, bit]
                size += 1
            subset ^= 1 << bit


@njit(parallel=True, cache=True)
def _ryser_residues(matrix, moduli, chunks):
    n = matrix.shape[0]
    total = np.int64(1) << n
    step = (total + chunks - 1) // chunks
    out = np.zeros((chunks, moduli.shape[0]), dtype=np.int64)
    for c in prange(chunks):
        start = c * step
        stop = min(total, start + step)
        if start < stop:
            _chunk_residues(matrix, start, stop, moduli, out[c])
    return out


@lru_cache(maxsize=None)
def _moduli(count: int) -> tuple:
    primes = []
    p = _MODULUS_CEILING
    for _ in range(count):
        p = int(prevprime(p))
        primes.append(p)
    return tuple(primes)


def moduli_covering(bound: int) -> List[int]:
    """Fewest large primes whose product exceeds bound"""
    count = 1
    while math.prod(_moduli(count)) <= bound:
        count += 1
    return list(_moduli(count))


class RyserEngine(PermanentEngine):
    """Exact Ryser permanent over a partitioned Gray-code subset range"""

    def __init__(self, ceiling: int = None, threads: Optional[int] = None, chunks: Optional[int] = None):
        super().__init__("ryser", ceiling or Config.RYSER_CEILING)
        self.threads = threads
        self.chunks = chunks

    def _permanent(self, matrix: CompatMatrix) -> int:
        n = matrix.n
        bound = math.prod(matrix.row_sizes())
        if bound == 0:
            return 0

        moduli = moduli_covering(bound)
        threads = self.threads or Config.thread_count()
        numba.set_num_threads(max(1, min(threads, numba.config.NUMBA_NUM_THREADS)))
        chunks = self.chunks or threads * Config.RYSER_CHUNKS_PER_THREAD
        chunks = max(1, min(chunks, 1 << n))
        self.logger.debug(f"ryser: n={n}, {len(moduli)} moduli, {chunks} chunks on {threads} threads")

        partials = _ryser_residues(matrix.to_array(), np.array(moduli, dtype=np.int64), chunks)

        residues = []
        for k, p in enumerate(moduli):
            total = sum(int(v) for v in partials[:, k]) % p
            if n % 2:
                total = (-total) % p
            residues.append(total)
        value, _ = crt(moduli, residues)
        return int(value)
