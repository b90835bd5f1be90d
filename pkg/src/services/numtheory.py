"""Elementary number theory on top of a smallest-prime-factor sieve.

One table (Config.SIEVE_LIMIT) serves every other module; callers may pass
their own table when they need a different range.
"""

import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional

import numpy as np

from ..models.number import Factorization, SpfTable
from ..utils.config import Config
from ..utils.errors import InvalidArgumentError, OutOfRangeError
from ..utils.logger import get_logger

logger = get_logger("numtheory")


def build_spf(limit: int) -> SpfTable:
    """Sieve the smallest prime factor of every 2 <= m <= limit"""
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be at least 2, got {limit}")

    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            segment = spf[p * p::p]
            segment[segment == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked
    spf.flags.writeable = False

    logger.debug(f"Built smallest-prime-factor table up to {limit}")
    return SpfTable(limit=limit, spf=spf)


@lru_cache(maxsize=None)
def default_table() -> SpfTable:
    return build_spf(Config.SIEVE_LIMIT)


def table_covering(m: int) -> SpfTable:
    """The shared table if it reaches m, otherwise a fresh one sized for m"""
    table = default_table()
    if m <= table.limit:
        return table
    logger.info(f"Building a dedicated sieve up to {m} (shared table stops at {table.limit})")
    return build_spf(max(m, 2))


def factorize(m: int, table: Optional[SpfTable] = None) -> Factorization:
    """Prime factorization of m by repeated smallest-prime-factor lookups"""
    if m < 1:
        raise InvalidArgumentError(f"cannot factorize {m}")
    table = table or default_table()
    if m > table.limit:
        raise OutOfRangeError(f"{m} exceeds the sieve limit {table.limit}")

    pairs = []
    while m > 1:
        p = int(table.spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        pairs.append((p, e))
    return Factorization(tuple(pairs))


def valuation(j: int, p: int) -> int:
    """v_p(j), the exponent of the prime p in j"""
    if j < 1:
        raise InvalidArgumentError(f"valuation needs a positive integer, got {j}")
    e = 0
    while j % p == 0:
        j //= p
        e += 1
    return e


def divisors(m: int, table: Optional[SpfTable] = None) -> List[int]:
    """All positive divisors of m in increasing order"""
    result = [1]
    for p, e in factorize(m, table).pairs:
        result = [d * p ** k for d in result for k in range(e + 1)]
    return sorted(result)


def tau(m: int, table: Optional[SpfTable] = None) -> int:
    return math.prod(e + 1 for _, e in factorize(m, table).pairs)


def sigma(m: int, table: Optional[SpfTable] = None) -> int:
    return math.prod((p ** (e + 1) - 1) // (p - 1) for p, e in factorize(m, table).pairs)


def phi(m: int, table: Optional[SpfTable] = None) -> int:
    return math.prod(p ** (e - 1) * (p - 1) for p, e in factorize(m, table).pairs)


def alpha(b: int, table: Optional[SpfTable] = None) -> Fraction:
    """Density of j with v_p(j) = 0 mod (v_p(b)+1) for all p | b; equals b/sigma(b)"""
    result = Fraction(1)
    for p, i in factorize(b, table).pairs:
        result *= Fraction(p ** (i + 1) - p ** i, p ** (i + 1) - 1)
    return result


def tau_below(m: int, z: float, table: Optional[SpfTable] = None) -> int:
    """Number of divisors of m strictly below z"""
    return sum(1 for d in divisors(m, table) if d < z)


def primes_below(x: int) -> List[int]:
    if x <= 2:
        return []
    return [int(p) for p in table_covering(x - 1).primes_below(x)]


def mertens_product(x: int) -> Decimal:
    """prod_{p < x} (1 - 1/p) carried at Config.DECIMAL_PRECISION digits"""
    if x < 2:
        raise InvalidArgumentError(f"Mertens product needs x >= 2, got {x}")
    with localcontext() as ctx:
        ctx.prec = Config.DECIMAL_PRECISION
        product = Decimal(1)
        for p in primes_below(x):
            product *= 1 - Decimal(1) / p
        return +product
