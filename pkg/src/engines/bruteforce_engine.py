from typing import Iterator, Optional, Tuple

from .base_engine import PermanentEngine
from ..models.compat import CompatMatrix
from ..utils.config import Config


def iter_assignments(matrix: CompatMatrix, limit: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Yield allowed permutations as tuples of column positions, lexicographically.

    Backtracks row by row over the bitset rows; a branch is cut as soon as some
    later row has no free column left.
    """
    n = matrix.n
    rows = matrix.rows
    full = (1 << n) - 1
    chosen = [0] * n
    emitted = 0

    def feasible(row_index: int, used: int) -> bool:
        free = full & ~used
        for t in range(row_index, n):
            if not rows[t] & free:
                return False
        return True

    if n == 0:
        yield ()
        return
    stack = [(0, 0, rows[0])]
    while stack:
        row_index, used, options = stack.pop()
        if not options:
            continue
        low = options & -options
        stack.append((row_index, used, options & ~low))
        u = low.bit_length() - 1
        chosen[row_index] = u
        now_used = used | low
        if row_index + 1 == n:
            yield tuple(chosen)
            emitted += 1
            if limit is not None and emitted >= limit:
                return
            continue
        if feasible(row_index + 1, now_used):
            stack.append((row_index + 1, now_used, rows[row_index + 1] & ~now_used))


class BruteforceEngine(PermanentEngine):
    """Oracle: exhaustive enumeration with pruning"""

    def __init__(self, ceiling: int = None):
        super().__init__("bruteforce", ceiling or Config.BRUTEFORCE_CEILING)

    def _permanent(self, matrix: CompatMatrix) -> int:
        return sum(1 for _ in iter_assignments(matrix))
