"""Verification reports shared by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class IdentityViolation(AssertionError):
    """An identity that must hold exactly was found to fail."""


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None


@dataclass
class Report:
    """Outcome of a verification suite: one :class:`Check` per claim."""

    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "", witness: Any = None) -> Check:
        c = Check(name, bool(passed), detail, witness)
        self.checks.append(c)
        return c

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail, c.witness))

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def require(self) -> Report:
        """Raise :class:`IdentityViolation` on the first failed check."""
        bad = self.first_failure()
        if bad is not None:
            raise IdentityViolation(f"{self.title}: {bad.name}: {bad.detail}")
        return self

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if c.detail:
                line += f"  {c.detail}"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "info": self.info,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail,
                 "witness": None if c.witness is None else str(c.witness)}
                for c in self.checks
            ],
        }
