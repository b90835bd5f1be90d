import math
import time
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from ..engines.bruteforce_engine import BruteforceEngine, iter_assignments
from ..engines.ryser_engine import RyserEngine
from ..models.compat import CompatKind, CompatMatrix
from ..models.counts import CountResult
from ..utils.config import Config
from ..utils.errors import InvalidArgumentError
from ..utils.logger import get_logger
from .compat import build_matrix, build_matrix_on

logger = get_logger("permanent")


def permanent_bruteforce(matrix: CompatMatrix) -> int:
    """Oracle count by exhaustive enumeration (n <= 12)"""
    return BruteforceEngine().permanent(matrix)


def permanent_ryser(matrix: CompatMatrix, threads: Optional[int] = None, chunks: Optional[int] = None) -> int:
    """Exact Ryser permanent; the result does not depend on threads or chunks"""
    return RyserEngine(threads=threads, chunks=chunks).permanent(matrix)


def resolve_engine(engine: str, n: int) -> str:
    if engine not in Config.ENGINE_NAMES:
        raise InvalidArgumentError(f"unknown engine {engine!r}; choose from {', '.join(Config.ENGINE_NAMES)}")
    if engine == "auto":
        return "bruteforce" if n <= Config.AUTO_BRUTEFORCE_MAX else "ryser"
    return engine


def permanent(matrix: CompatMatrix, engine: str = "auto", threads: Optional[int] = None) -> int:
    """Permanent with the engine picked by name"""
    chosen = resolve_engine(engine, matrix.n)
    if chosen == "bruteforce":
        return permanent_bruteforce(matrix)
    return permanent_ryser(matrix, threads=threads)


def count_permutations(kind: CompatKind, n: int, engine: str = "auto",
                       threads: Optional[int] = None) -> CountResult:
    """Number of permutations of [n] compatible with `kind` at every point"""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    chosen = resolve_engine(engine, n)
    started = time.perf_counter()
    matrix = build_matrix(kind, n)
    count = permanent(matrix, chosen, threads)
    return CountResult(kind=kind, n=n, count=count, engine=chosen,
                       elapsed=time.perf_counter() - started)


def table1(max_n: int, engine: str = "auto", threads: Optional[int] = None,
           min_n: int = 1) -> List[Tuple[CountResult, CountResult]]:
    """(divisibility, lcm) count pairs for n = min_n..max_n"""
    if max_n < 1:
        raise InvalidArgumentError(f"max_n must be positive, got {max_n}")
    rows = []
    for n in range(min_n, max_n + 1):
        div = count_permutations(CompatKind.DIV, n, engine, threads)
        lcm = count_permutations(CompatKind.LCM, n, engine, threads)
        logger.info(f"table1 row {n}: {div.count} / {lcm.count}")
        rows.append((div, lcm))
    return rows


def iter_permutations(matrix: CompatMatrix, limit: Optional[int] = None) -> Iterator[Dict[int, int]]:
    """Allowed permutations as label -> image maps, in lexicographic order"""
    labels = matrix.labels
    for assignment in iter_assignments(matrix, limit):
        yield {labels[t]: labels[u] for t, u in enumerate(assignment)}


def anticoprime_count(n: int, engine: str = "auto", threads: Optional[int] = None) -> int:
    """A(n) through the reduced matrix: 1 is forced to itself, {2..n} need gcd > 1"""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    if n == 1:
        return 1
    reduced = build_matrix_on(CompatKind.ANTICOPRIME, range(2, n + 1))
    return permanent(reduced, engine, threads)


def ratio_profile(max_n: int, engine: str = "auto", threads: Optional[int] = None) -> List[dict]:
    """R(n) = #S_lcm(n) / #S_div(n) with its n-th root"""
    profile = []
    for div, lcm in table1(max_n, engine, threads):
        ratio = Fraction(lcm.count, div.count)
        profile.append({
            "n": div.n,
            "div": div.count,
            "lcm": lcm.count,
            "ratio": ratio,
            "root": round(math.exp((math.log(lcm.count) - math.log(div.count)) / div.n), 4),
        })
    return profile
