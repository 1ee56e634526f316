from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL = "expected-fail"
STATUSES = (PASS, FAIL, EXPECTED_FAIL)


def _jsonable(v: Any) -> Any:
    if isinstance(v, float) and v in (float("inf"), float("-inf")):
        return "inf" if v > 0 else "-inf"
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "numerator") and hasattr(v, "denominator") and not isinstance(v, (int, float, bool)):
        return f"{v.numerator}/{v.denominator}"
    return v


@dataclass
class CheckReport:
    check_name: str
    params: dict
    status: str
    witness: dict | None = None
    notes: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError("a failing report must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def sort_key(self) -> tuple:
        return (self.check_name, json.dumps(_jsonable(self.params), sort_keys=True))

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "status": self.status,
            "params": _jsonable(self.params),
            "witness": _jsonable(self.witness),
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(d["check"], d["params"], d["status"], d["witness"], d.get("notes", ""))


@dataclass
class SuiteReport:
    checks: list[CheckReport] = field(default_factory=list)
    wall_time: float = 0.0

    def __post_init__(self):
        self.checks = sorted(self.checks, key=CheckReport.sort_key)

    @property
    def summary(self) -> dict:
        counts = {s: 0 for s in STATUSES}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.checks],
            "summary": {**self.summary, "wall_time": round(self.wall_time, 3)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_json(cls, s: str) -> SuiteReport:
        d = json.loads(s)
        return cls([CheckReport.from_dict(c) for c in d["checks"]], d["summary"].get("wall_time", 0.0))

    def to_text(self) -> str:
        width = max((len(c.check_name) for c in self.checks), default=5)
        lines = []
        for c in self.checks:
            params = ", ".join(f"{k}={v}" for k, v in _jsonable(c.params).items())
            wit = f"  witness={_jsonable(c.witness)}" if c.witness and c.status != "pass" else ""
            lines.append(f"{c.check_name:<{width}}  {c.status:<13}  {params}{wit}")
        s = self.summary
        lines.append(
            f"-- {s[PASS]} pass, {s[FAIL]} fail, {s[EXPECTED_FAIL]} expected-fail"
            f" ({self.wall_time:.2f}s)"
        )
        return "\n".join(lines)
