import json
import os
from typing import Dict, List, Optional

from ..models.compat import CompatKind
from ..models.counts import CountResult
from ..utils.config import Config
from ..utils.logger import get_logger

logger = get_logger("fixtures")


class FixtureStore:
    """Service for reading the published regression values under data/"""

    def __init__(self, data_dir: Optional[str] = None):
        self.data_dir = data_dir or Config.DATA_DIR
        self.table1_file = os.path.join(self.data_dir, os.path.basename(Config.TABLE1_FILE))
        self.table2_file = os.path.join(self.data_dir, os.path.basename(Config.TABLE2_FILE))
        self.constants_file = os.path.join(self.data_dir, os.path.basename(Config.CONSTANTS_FILE))
        self._cache: Dict[str, dict] = {}

    def _load(self, path: str) -> dict:
        """Load one fixture file, once"""
        if path not in self._cache:
            try:
                with open(path, "r") as f:
                    self._cache[path] = json.load(f)
            except FileNotFoundError:
                logger.error(f"Fixture file missing: {path}")
                raise
            logger.debug(f"Loaded {path} ({self._cache[path].get('source', 'no source')})")
        return self._cache[path]

    def table1_rows(self, max_n: Optional[int] = None) -> List[dict]:
        """Count table rows, optionally only n <= max_n"""
        rows = self._load(self.table1_file)["rows"]
        if max_n is None:
            return list(rows)
        return [row for row in rows if row["n"] <= max_n]

    def expected_count(self, kind: CompatKind, n: int) -> Optional[CountResult]:
        """Published count for (kind, n); None when the table has no entry"""
        key = {CompatKind.DIV: "div", CompatKind.LCM: "lcm"}.get(kind)
        if key is None:
            return None
        for row in self.table1_rows():
            if row["n"] == n and key in row:
                return CountResult(kind=kind, n=n, count=int(row[key]), engine="fixture",
                                   nth_root=float(row[f"{key}_root"]))
        return None

    def table2_rows(self) -> List[dict]:
        return list(self._load(self.table2_file)["rows"])

    def table2_row(self, b: int) -> Optional[dict]:
        for row in self.table2_rows():
            if row["b"] == b:
                return row
        return None

    def upper_constants(self, k: int) -> Optional[dict]:
        return self._load(self.constants_file)["upper"].get(str(k))

    def ratio_constants(self) -> dict:
        return self._load(self.constants_file)["ratio"]
