from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

#: counterexamples kept in a report; the count is always exact
MAX_LISTED = 20


@dataclass
class VerificationReport:
    """Outcome of an exhaustive verification sweep.

    Failures are data: a sweep never raises on a counterexample, it records
    it here and sets ``passed`` to False.
    """

    suite: str
    checked: int = 0
    counterexamples: list[Any] = field(default_factory=list)
    failures: int = 0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def check(self, ok: bool, detail: Any = None) -> bool:
        self.checked += 1
        if not ok:
            self.fail(detail)
        return ok

    def fail(self, detail: Any) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_LISTED:
            self.counterexamples.append(detail)

    def merge(self, other: VerificationReport) -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = MAX_LISTED - len(self.counterexamples)
        self.counterexamples.extend(other.counterexamples[:max(room, 0)])

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
        }
        if self.failures > len(self.counterexamples):
            out["failures"] = self.failures
        if self.notes:
            out["notes"] = self.notes
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)
