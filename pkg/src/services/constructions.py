"""Block families T(i, j) witnessing the lower bound for #S_lcm(n).

For the divisors 1 = a_1 < ... < a_tau = b of b, generators j in
I_i = (n/a_{i+1}, n/a_i] (and I_tau = (0, n/b]) whose exponents satisfy
v_p(j) = 0 mod (v_p(b)+1) for every p | b carry the block {d*j : d <= a_i, d | b}.
Permuting each block inside itself and fixing everything else stays in S_lcm(n).
"""

import itertools
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from ..models.blocks import Block, BlockFamily
from ..models.compat import CompatKind
from ..utils.errors import ConstructionError, InvalidArgumentError
from ..utils.logger import get_logger
from .bounds import divisor_profile, p_lcm
from .compat import build_matrix_on, is_compatible
from .numtheory import alpha, factorize, valuation
from .permanent import iter_permutations

logger = get_logger("constructions")


def admissible(j: int, b: int) -> bool:
    """v_p(j) = 0 mod (v_p(b) + 1) for every prime p | b"""
    if j < 1:
        raise InvalidArgumentError(f"generator must be positive, got {j}")
    return all(valuation(j, p) % (e + 1) == 0 for p, e in factorize(b).pairs)


def _interval_range(divisors: List[int], i: int, n: int) -> range:
    """Integers of I_i (1-based i)"""
    if i == len(divisors):
        return range(1, n // divisors[-1] + 1)
    return range(n // divisors[i] + 1, n // divisors[i - 1] + 1)


def build_family(b: int, n: int) -> BlockFamily:
    """All blocks T(i, j), i >= 2, with an audit of disjointness and range"""
    if b < 2 or n < b:
        raise InvalidArgumentError(f"need b >= 2 and n >= b, got b = {b}, n = {n}")
    profile = divisor_profile(b)
    a = list(profile.divisors)
    family = BlockFamily(b=b, n=n, divisors=a)
    used = set()

    for i in range(1, profile.tau + 1):
        dilations = profile.below(a[i - 1])
        count = 0
        for j in _interval_range(a, i, n):
            if not admissible(j, b):
                continue
            count += 1
            # s(1, b) = {1}: singleton blocks act as the identity
            if i == 1:
                continue
            elements = tuple(d * j for d in dilations)
            if elements[-1] > n:
                raise ConstructionError(f"block T({i},{j}) leaves [1, {n}]")
            if used.intersection(elements):
                raise ConstructionError(f"block T({i},{j}) overlaps an earlier block")
            used.update(elements)
            family.blocks.append(Block(interval=i, generator=j, elements=elements))
        family.per_interval_counts[i] = count

    logger.info(f"Family b={b}, n={n}: {len(family.blocks)} blocks covering {len(used)} integers")
    return family


def family_count(family: BlockFamily) -> int:
    """prod over blocks of p(a_i, b): permutations fixing every block setwise"""
    result = 1
    for block in family.blocks:
        result *= p_lcm(family.divisors[block.interval - 1], family.b)
    return result


@lru_cache(maxsize=None)
def _local_permutations(a_i: int, b: int, limit: int) -> Tuple[Dict[int, int], ...]:
    """First `limit` permutations of s(a_i, b) with lcm <= a_i, lexicographic"""
    matrix = build_matrix_on(CompatKind.LCM, divisor_profile(b).below(a_i), bound=a_i)
    return tuple(iter_permutations(matrix, limit))


def emit_members(family: BlockFamily, limit: int) -> List[Tuple[int, ...]]:
    """Up to `limit` distinct members of S_lcm(n) built from the family.

    Each member is returned as (pi(1), ..., pi(n)).
    """
    if limit < 1:
        raise InvalidArgumentError(f"limit must be positive, got {limit}")
    choices = [
        [(block, local) for local in _local_permutations(family.divisors[block.interval - 1], family.b, limit)]
        for block in family.blocks
    ]
    members = []
    for combination in itertools.islice(itertools.product(*choices), limit):
        image = list(range(1, family.n + 1))
        for block, local in combination:
            j = block.generator
            for d, target in local.items():
                image[d * j - 1] = target * j
        members.append(tuple(image))
    return members


def verify_member(image: Tuple[int, ...]) -> bool:
    """Is the tuple a permutation of [n] lying in S_lcm(n)?"""
    n = len(image)
    if sorted(image) != list(range(1, n + 1)):
        return False
    return all(is_compatible(CompatKind.LCM, j, image[j - 1], n) for j in range(1, n + 1))


def interval_densities(b: int, n: int) -> Dict[int, float]:
    """Admissible generators in I_i divided by the length of I_i; each tends to alpha(b)"""
    if b < 2 or n < b:
        raise InvalidArgumentError(f"need b >= 2 and n >= b, got b = {b}, n = {n}")
    a = list(divisor_profile(b).divisors)
    j = np.arange(1, n + 1, dtype=np.int64)
    mask = np.ones(n, dtype=bool)
    for p, e in factorize(b).pairs:
        rest = j.copy()
        exponent = np.zeros(n, dtype=np.int64)
        divisible = rest % p == 0
        while divisible.any():
            exponent[divisible] += 1
            rest[divisible] //= p
            divisible = rest % p == 0
        mask &= exponent % (e + 1) == 0

    prefix = np.concatenate(([0], np.cumsum(mask)))
    densities = {}
    for i in range(1, len(a) + 1):
        span = _interval_range(a, i, n)
        count = int(prefix[span.stop - 1] - prefix[span.start - 1])
        width = n / b if i == len(a) else n * (1 / a[i - 1] - 1 / a[i])
        densities[i] = count / width
    logger.debug(f"interval densities b={b}, n={n}: target {float(alpha(b)):.6f}")
    return densities


def odd_pair_family(n: int) -> BlockFamily:
    """The simpler b = 2 family: pairs {j, 2j} with j odd, j <= n/2"""
    if n < 2:
        raise InvalidArgumentError(f"need n >= 2, got {n}")
    family = BlockFamily(b=2, n=n, divisors=[1, 2])
    for j in range(1, n // 2 + 1, 2):
        family.blocks.append(Block(interval=2, generator=j, elements=(j, 2 * j)))
    family.per_interval_counts[2] = len(family.blocks)
    return family
