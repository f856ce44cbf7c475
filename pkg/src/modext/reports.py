"""Pass/fail reports with exact witnesses.

Every identity check in the toolkit reports either a clean pass or the
first failing instance: the basis indices involved and both evaluated
sides.  Checks marked informational are recorded but do not count
toward the overall verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Check:
    name: str
    passed: bool
    witness: Optional[tuple] = None  # (indices, lhs, rhs) for a failure
    note: str = ""
    informational: bool = False


@dataclass
class ConditionReport:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, witness=None, note="", informational=False):
        self.checks.append(Check(name, passed, witness, note, informational))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def failures(self):
        return [c for c in self.checks if not c.passed and not c.informational]

    def __bool__(self):
        return self.passed

    def merge(self, other: "ConditionReport"):
        self.checks.extend(other.checks)

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            tag = "pass" if c.passed else "FAIL"
            extra = " [info]" if c.informational else ""
            line = "%s: %s%s" % (c.name, tag, extra)
            if not c.passed and c.witness is not None:
                line += "  witness=%r" % (c.witness,)
            lines.append(line)
        return "\n".join(lines)


class HypothesisError(ValueError):
    """A construction's stated hypothesis failed; carries the report."""

    def __init__(self, hypothesis: str, report: Optional[ConditionReport] = None):
        self.hypothesis = hypothesis
        self.report = report
        msg = "hypothesis failed: %s" % hypothesis
        if report is not None and report.failures():
            msg += " (%s)" % report.failures()[0].name
        super().__init__(msg)
