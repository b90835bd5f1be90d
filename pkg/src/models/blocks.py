from dataclasses import dataclass, field
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class Block:
    """T(i, j) = {d*j : d in s(a_i, b)}, listed in the order of s(a_i, b)"""
    interval: int
    generator: int
    elements: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass
class BlockFamily:
    """Pairwise disjoint blocks whose setwise stabilisers give S_lcm(n) witnesses"""
    b: int
    n: int
    divisors: List[int]
    blocks: List[Block] = field(default_factory=list)
    per_interval_counts: Dict[int, int] = field(default_factory=dict)

    @property
    def covered(self) -> int:
        return sum(block.size for block in self.blocks)

    def interval_bounds(self, i: int) -> Tuple[float, float]:
        """Real endpoints (low, high] of I_i"""
        a = self.divisors
        if i == len(a):
            return 0.0, self.n / self.b
        return self.n / a[i], self.n / a[i - 1]

    def to_dict(self):
        return {
            "b": self.b,
            "n": self.n,
            "blocks": len(self.blocks),
            "covered": self.covered,
            "per_interval_counts": {str(i): c for i, c in sorted(self.per_interval_counts.items())},
            "block_list": [
                {"i": block.interval, "j": block.generator, "elements": list(block.elements)}
                for block in self.blocks
            ],
        }
