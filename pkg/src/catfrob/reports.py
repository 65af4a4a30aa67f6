"""Law reports and verdicts shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

HOLDS = "holds-on-probes"
REFUTED = "refuted"
UNDECIDED = "undecided"


@dataclass
class LawResult:
    law: str
    passed: bool
    witness: Any = None
    detail: str = ""


@dataclass
class LawReport:
    """An ordered list of named pass/fail results; never aborts early."""

    results: list[LawResult] = field(default_factory=list)

    def add(self, law: str, passed: bool, witness: Any = None, detail: str = "") -> bool:
        self.results.append(LawResult(law, bool(passed), witness if not passed else None, detail))
        return bool(passed)

    def expect_equal(self, cat, law: str, lhs, rhs, where: Any = None) -> bool:
        """Record whether ``lhs == rhs`` in ``cat``; on failure keep a witness."""
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            return self.add(law, False, {"at": where, "shape": [repr(lhs.dom), repr(lhs.cod), repr(rhs.dom), repr(rhs.cod)]})
        if cat.equal(lhs, rhs):
            return self.add(law, True)
        return self.add(law, False, {"at": where, "diff": cat.witness(lhs, rhs)})

    def extend(self, other: "LawReport", prefix: str = "") -> None:
        for r in other.results:
            self.results.append(LawResult(prefix + r.law, r.passed, r.witness, r.detail))

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def laws(self) -> list[str]:
        seen = []
        for r in self.results:
            if r.law not in seen:
                seen.append(r.law)
        return seen

    def passed(self, law: str) -> bool:
        """True iff every recorded instance of ``law`` (or its sub-laws) passed."""
        hits = [r for r in self.results if r.law == law or r.law.startswith(law + ".")]
        if not hits:
            raise KeyError(law)
        return all(r.passed for r in hits)

    def first_failure(self) -> Optional[LawResult]:
        for r in self.results:
            if not r.passed:
                return r
        return None

    def summary(self) -> dict[str, bool]:
        """Collapse repeated instances of a law into one verdict per law id."""
        out: dict[str, bool] = {}
        for r in self.results:
            out[r.law] = out.get(r.law, True) and r.passed
        return out

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class Verdict:
    status: str
    witness: Any = None
    detail: str = ""

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    for v in verdicts:
        if v.status != HOLDS:
            return v
    return Verdict(HOLDS)
