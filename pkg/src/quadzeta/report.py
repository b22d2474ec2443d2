"""Machine-readable run reports (schema v1)."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Any

SCHEMA_ID = "quadzeta/run-report/v1"


@dataclass
class RunReport:
    command: str
    argv: list[str]
    parameters: dict[str, Any]
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)
    passed: bool = True
    wall_time: float = 0.0
    schema: str = SCHEMA_ID

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(**d)

    @classmethod
    def from_json(cls, s: str) -> "RunReport":
        return cls.from_dict(json.loads(s))


def load_schema() -> dict:
    text = resources.files("quadzeta").joinpath("schemas/run_report.v1.json").read_text()
    return json.loads(text)
