import time
from abc import ABC, abstractmethod

from ..models.compat import CompatMatrix
from ..utils.errors import ResourceLimitError
from ..utils.logger import get_logger


class PermanentEngine(ABC):
    """Abstract base class for exact 0-1 permanent engines"""

    def __init__(self, name: str, ceiling: int):
        self.name = name
        self.ceiling = ceiling
        self.logger = get_logger(f"engines.{name}")

    @abstractmethod
    def _permanent(self, matrix: CompatMatrix) -> int:
        """Exact permanent of a matrix already checked against the ceiling"""
        pass

    def permanent(self, matrix: CompatMatrix) -> int:
        """Count the permutations the matrix allows"""
        self._check_ceiling(matrix)
        started = time.perf_counter()
        result = self._permanent(matrix)
        self.logger.info(
            f"{self.name}: {matrix.kind.value} n={matrix.n} -> {result} "
            f"in {time.perf_counter() - started:.3f}s"
        )
        return result

    def _check_ceiling(self, matrix: CompatMatrix):
        if matrix.n > self.ceiling:
            raise ResourceLimitError(
                f"{self.name} engine refuses n = {matrix.n} (ceiling {self.ceiling})"
            )
