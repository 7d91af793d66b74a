"""Check reports shared by every validator in the package."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of one verified identity.

    name: stable machine identifier, law: the human-readable statement being
    checked, witness: where it failed (empty when it passed).
    """

    name: str
    law: str
    passed: bool
    witness: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "law": self.law,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
        }


@dataclass
class ValidationReport:
    """An ordered list of checks; ok() iff every check passed."""

    checks: list[Check] = field(default_factory=list)

    def record(self, name: str, law: str, passed: bool, witness: dict[str, Any] | None = None) -> None:
        self.checks.append(Check(name, law, passed, witness or {}))

    def require(self, name: str, law: str, passed: bool, witness: dict[str, Any] | None = None) -> None:
        """Record, but only keep the first failure per name to cap noise."""
        if passed or not any(c.name == name and not c.passed for c in self.checks):
            self.record(name, law, passed, witness)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.law, c.passed, c.witness))

    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list[dict[str, Any]]:
        return [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)]

    def __repr__(self) -> str:
        bad = len(self.failures())
        return f"ValidationReport({len(self.checks)} checks, {bad} failing)"
