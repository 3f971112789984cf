"""Structured verification reports.

Verifiers never raise on a failed identity; they append a :class:`Check` and
let the caller decide.  Reports serialize to the versioned JSON document
described in :mod:`smashkit.schemas`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Check:
    preset: str
    axiom: str
    labels: tuple[str, ...]
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {
            "preset": self.preset,
            "axiom": self.axiom,
            "labels": list(self.labels),
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class Report:
    preset: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def record(self, axiom: str, labels: Iterable, lhs, rhs, render=str) -> bool:
        passed = lhs == rhs
        self.checks.append(
            Check(self.preset, axiom, tuple(str(b) for b in labels), passed,
                  render(lhs), render(rhs))
        )
        return passed

    def record_le(self, axiom: str, labels: Iterable, lhs, rhs) -> bool:
        """Record an inequality check ``lhs <= rhs`` between exact numbers."""
        passed = lhs <= rhs
        self.checks.append(
            Check(self.preset, axiom, tuple(str(b) for b in labels), passed,
                  str(lhs), str(rhs))
        )
        return passed

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def by_axiom(self, axiom: str) -> list[Check]:
        return [c for c in self.checks if c.axiom == axiom]

    def summary(self) -> dict[str, tuple[int, int]]:
        """Map axiom -> (passed, total), in first-seen order."""
        total: Counter = Counter()
        ok: Counter = Counter()
        for c in self.checks:
            total[c.axiom] += 1
            ok[c.axiom] += c.passed
        return {a: (ok[a], total[a]) for a in total}

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "preset": self.preset,
            "pass": self.passed,
            "notes": list(self.notes),
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"note: {n}" for n in self.notes]
        for axiom, (ok, n) in self.summary().items():
            status = "PASS" if ok == n else "FAIL"
            lines.append(f"{status} {self.preset} {axiom}: {ok}/{n}")
        for c in self.failures:
            lines.append(f"  failed {c.axiom} on [{', '.join(c.labels)}]: lhs={c.lhs} rhs={c.rhs}")
        lines.append("all checks passed" if self.passed else "some checks FAILED")
        return "\n".join(lines)

    def __bool__(self):
        return self.passed
