"""Structured pass/fail records emitted by verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class Record:
    """One check outcome.

    ``passed`` is True/False for evaluated checks and None for skipped
    ones (a skip is never a pass).  Failed records carry a reproducible
    counterexample: enough serialized input (digraph text plus witness)
    to rerun the same check and fail it again.
    """

    check: str
    input: dict[str, Any]
    value: Any = None
    passed: Optional[bool] = True
    counterexample: Optional[dict[str, Any]] = None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "check": self.check,
            "input": self.input,
            "value": self.value,
            "pass": self.passed,
        }
        if self.passed is None:
            out["skipped"] = True
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class Report:
    """An ordered collection of records plus run metadata.

    ``metadata`` holds reproducibility inputs (seeds, caps).  Wall-clock
    timing is deliberately kept in the separate ``elapsed_seconds``
    attribute and never serialized, so reports from identical inputs are
    byte-identical.
    """

    records: list[Record] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: Optional[float] = None

    @property
    def all_passed(self) -> bool:
        return all(r.passed is not False for r in self.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if r.passed is False]

    @property
    def skipped(self) -> list[Record]:
        return [r for r in self.records if r.passed is None]

    def extend(self, other: "Report") -> None:
        self.records.extend(other.records)

    def to_dict(self) -> dict[str, Any]:
        return {
            "records": [r.to_dict() for r in self.records],
            "metadata": self.metadata,
        }
