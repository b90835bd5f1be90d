import math
from dataclasses import dataclass
from typing import Optional

from .compat import CompatKind


def nth_root(count: int, n: int) -> float:
    """count^(1/n) rounded to 4 places, the convention of the published count table"""
    if count <= 0:
        return 0.0
    return round(math.exp(math.log(count) / n), 4)


@dataclass
class CountResult:
    """Exact number of permutations of [n] compatible with one constraint kind"""
    kind: CompatKind
    n: int
    count: int
    engine: str
    elapsed: float = 0.0
    nth_root: Optional[float] = None

    def __post_init__(self):
        if self.nth_root is None:
            self.nth_root = nth_root(self.count, self.n)

    def to_dict(self):
        """Convert to dictionary; the count stays an exact decimal string"""
        return {
            "kind": self.kind.value,
            "n": self.n,
            "count": str(self.count),
            "nth_root": f"{self.nth_root:.4f}",
            "engine": self.engine,
            "elapsed": round(self.elapsed, 6),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            kind=CompatKind.from_name(data["kind"]),
            n=int(data["n"]),
            count=int(data["count"]),
            engine=data.get("engine", "unknown"),
            elapsed=float(data.get("elapsed", 0.0)),
            nth_root=float(data["nth_root"]) if "nth_root" in data else None,
        )
