"""Compatibility predicates and the 0-1 matrices whose permanents count permutations."""

import math
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..models.compat import CompatKind, CompatMatrix
from ..utils.errors import InvalidArgumentError
from ..utils.logger import get_logger
from .numtheory import divisors

logger = get_logger("compat")


def _related(kind: CompatKind, j: int, jp: int, bound: int) -> bool:
    if kind is CompatKind.LCM:
        return j // math.gcd(j, jp) * jp <= bound
    if kind is CompatKind.DIV:
        return jp % j == 0 or j % jp == 0
    if kind is CompatKind.ANTICOPRIME:
        return j == 1 or math.gcd(j, jp) > 1
    return math.gcd(j, jp) == 1


def is_compatible(kind: CompatKind, j: int, jp: int, n: int) -> bool:
    """May a permutation of [n] send j to jp under this constraint kind?"""
    if n < 1 or not (1 <= j <= n and 1 <= jp <= n):
        raise InvalidArgumentError(f"indices ({j}, {jp}) must lie in [1, {n}]")
    return _related(kind, j, jp, n)


def build_matrix(kind: CompatKind, n: int) -> CompatMatrix:
    """Compatibility matrix on [n]"""
    if n < 1:
        raise InvalidArgumentError(f"matrix size must be positive, got {n}")
    return build_matrix_on(kind, range(1, n + 1), n)


def build_matrix_on(kind: CompatKind, labels: Iterable[int], bound: Optional[int] = None) -> CompatMatrix:
    """Compatibility matrix on an arbitrary ground set.

    `bound` is the lcm ceiling for LCM (defaults to the largest label); the
    other kinds ignore it.
    """
    labels = tuple(sorted(set(labels)))
    if not labels or labels[0] < 1:
        raise InvalidArgumentError("ground set must be a nonempty set of positive integers")
    bound = labels[-1] if bound is None else bound

    if labels == tuple(range(1, len(labels) + 1)) and kind in (CompatKind.LCM, CompatKind.DIV):
        rows = _interval_rows(kind, len(labels), bound)
    else:
        rows = []
        for j in labels:
            mask = 0
            for u, jp in enumerate(labels):
                if _related(kind, j, jp, bound):
                    mask |= 1 << u
            rows.append(mask)

    matrix = CompatMatrix(kind=kind, labels=labels, bound=bound, rows=tuple(rows))
    logger.debug(f"Built {kind.value} matrix on {len(labels)} labels (bound {bound})")
    return matrix


def _interval_rows(kind: CompatKind, n: int, bound: int):
    """Rows for the ground set [n] by walking divisor/multiple pairs.

    LCM: lcm[j, j'] <= bound iff j = ab, j' = bc, gcd(a, c) = 1, abc <= bound,
    so every compatible pair is produced once from its (a, b, c).
    """
    rows = [0] * (n + 1)
    if kind is CompatKind.DIV:
        for d in range(1, n + 1):
            for m in range(d, n + 1, d):
                rows[d] |= 1 << (m - 1)
                rows[m] |= 1 << (d - 1)
        return rows[1:]

    limit = min(n, bound)
    for b in range(1, limit + 1):
        top = bound // b
        for a in range(1, top + 1):
            j = a * b
            if j > n:
                break
            for c in range(1, top // a + 1):
                jp = b * c
                if jp > n:
                    break
                if math.gcd(a, c) == 1:
                    rows[j] |= 1 << (jp - 1)
    return rows[1:]


def restrict(matrix: CompatMatrix, labels: Sequence[int]) -> CompatMatrix:
    """Submatrix on a subset of the ground set, keeping the same relation"""
    keep = [matrix.labels.index(j) for j in sorted(labels)]
    rows = []
    for t in keep:
        mask = 0
        for new_u, u in enumerate(keep):
            if (matrix.rows[t] >> u) & 1:
                mask |= 1 << new_u
        rows.append(mask)
    return CompatMatrix(
        kind=matrix.kind,
        labels=tuple(matrix.labels[t] for t in keep),
        bound=matrix.bound,
        rows=tuple(rows),
    )


def triple_decomposition(j: int, jp: int, n: int) -> Optional[Tuple[int, int, int]]:
    """(a, b, c) with j = ab, jp = bc, gcd(a, c) = 1, abc = lcm[j, jp] <= n"""
    b = math.gcd(j, jp)
    a, c = j // b, jp // b
    if a * b * c > n:
        return None
    return a, b, c


def neighbor_count_Nk(j: int, k: int, n: int) -> int:
    """N_k(j): how many j' in (n/k, n] have lcm[j, j'] <= n"""
    if k < 1 or not (j * k > n and j <= n):
        raise InvalidArgumentError(f"j = {j} is outside (n/k, n] for n = {n}, k = {k}")

    count = 0
    for a in divisors(j):
        b = j // a
        # c <= n/(ab) = n/j and bc > n/k
        for c in range(1, n // j + 1):
            if b * c * k > n and math.gcd(a, c) == 1:
                count += 1
    return count


def neighbor_count_table(k: int, n: int) -> np.ndarray:
    """N_k(j) for every j in (n/k, n]; entry t belongs to j = n//k + 1 + t.

    Each coprime (a, c) with a, c < k contributes one neighbour to j = ab for
    every b in (n/(k*min(a, c)), n/(ac)].
    """
    if k < 2 or n < 1:
        raise InvalidArgumentError(f"need k >= 2 and n >= 1, got k = {k}, n = {n}")
    low = n // k + 1
    counts = np.zeros(n + 1, dtype=np.int64)
    for a in range(1, k):
        for c in range(1, k):
            if math.gcd(a, c) != 1:
                continue
            b_low = n // (k * min(a, c)) + 1
            b_high = n // (a * c)
            if b_low > b_high:
                continue
            counts[a * b_low:a * b_high + 1:a] += 1
    return counts[low:]
