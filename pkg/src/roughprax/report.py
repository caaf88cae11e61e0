"""Conformance reports shared by the oracle suite, the theorem runner and
the fixture checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

STATUSES = ("pass", "fail", "documented-discrepancy")


@dataclass
class Check:
    """One verified statement.

    ``claim`` says in words what is being verified; ``detail`` carries
    counts and, for failures, the offending data.
    """

    name: str
    claim: str
    status: str
    detail: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown check status {self.status!r}")

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "claim": self.claim, "status": self.status, "detail": self.detail}


@dataclass
class ConformanceReport:
    fixture: str
    checks: list[Check] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)

    def add(self, name: str, claim: str, ok: bool, **detail: Any) -> Check:
        c = Check(name, claim, "pass" if ok else "fail", detail)
        self.checks.append(c)
        return c

    def discrepancy(self, name: str, claim: str, **detail: Any) -> Check:
        c = Check(name, claim, "documented-discrepancy", detail)
        self.checks.append(c)
        return c

    def extend(self, other: "ConformanceReport") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.failed]

    def by_name(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict[str, Any]:
        return {
            "fixture": self.fixture,
            "ok": self.ok,
            "checks": [c.as_dict() for c in self.checks],
            "notes": self.notes,
        }
