"""Three-valued axiom verdicts and the report container shared by all checkers."""

from dataclasses import dataclass, field
from enum import Enum


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


@dataclass
class AxiomResult:
    name: str
    samples: int = 0
    violations: int = 0
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    @property
    def verdict(self):
        if self.violations:
            return Verdict.FAIL
        if self.samples == 0:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS

    def record(self, ok, witness=None):
        """Count one effective sample; keep the first failing witness."""
        self.samples += 1
        if not ok:
            self.violations += 1
            if self.witness is None and witness is not None:
                self.witness = witness

    def to_dict(self):
        out = {
            "verdict": self.verdict.value,
            "samples": self.samples,
            "violations": self.violations,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class AxiomReport:
    subject: str
    results: dict = field(default_factory=dict)

    def add(self, name):
        res = AxiomResult(name)
        self.results[name] = res
        return res

    def __getitem__(self, name):
        return self.results[name]

    def __contains__(self, name):
        return name in self.results

    def verdict(self, name):
        return self.results[name].verdict

    @property
    def passed(self):
        """True when every axiom passed (inconclusive counts as not passed)."""
        return all(r.verdict is Verdict.PASS for r in self.results.values())

    def failures(self):
        return [n for n, r in self.results.items() if r.verdict is Verdict.FAIL]

    def to_dict(self):
        return {
            "subject": self.subject,
            "passed": self.passed,
            "axioms": {n: r.to_dict() for n, r in self.results.items()},
        }
