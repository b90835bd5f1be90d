import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of comparing one recomputed value with its published counterpart"""
    name: str
    expected: str
    actual: str
    status: str  # PASS, FAIL or SKIP

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"

    def to_dict(self):
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "status": self.status}


@dataclass
class OutputRecord:
    """Everything one CLI invocation prints.

    `rows` hold plain strings and numbers only; exact counts are already
    decimal strings when they get here.
    """
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    engine: Optional[str] = None
    threads: Optional[int] = None
    elapsed: float = 0.0
    lines: List[str] = field(default_factory=list)  # replaces the key=value text rendering when set

    def to_dict(self):
        return {
            "command": self.command,
            "parameters": self.parameters,
            "results": self.rows,
            "engine": self.engine,
            "threads": self.threads,
            "elapsed": round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        columns = _columns(self.rows)
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=columns, quoting=csv.QUOTE_NONNUMERIC,
                                lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({key: _flat(row.get(key, "")) for key in columns})
        return buffer.getvalue()

    def to_text(self) -> str:
        if self.lines:
            return "\n".join(self.lines)
        lines = []
        for row in self.rows:
            lines.append("  ".join(f"{key}={_flat(value)}" for key, value in row.items()))
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _columns(rows: List[Dict[str, Any]]) -> List[str]:
    columns = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def _flat(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return value
