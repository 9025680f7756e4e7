from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Outcome(str, Enum):
    HOMEOMORPHIC = "Homeomorphic"
    NOT_HOMEOMORPHIC = "NotHomeomorphic"
    CONSISTENT_AT_DEPTH = "ConsistentAtDepth"
    NOT_COVERED_BY_THEORY = "NotCoveredByTheory"
    # Screening outcome: the truncated presentations fail a necessary condition.
    REFUTED = "Refuted"


@dataclass(frozen=True)
class Verdict:
    """A classification outcome together with the invariant that decided it.

    ``theorem`` is a short tag of the classification result applied, e.g.
    ``"8.4"`` or ``"8.7(2)"``; ``certificate`` says in words why.
    """

    outcome: Outcome
    certificate: str
    theorem: str | None = None
    witness_prime: int | None = None
    depth: int | None = None
    reason: str | None = None

    def __post_init__(self):
        if self.outcome is Outcome.NOT_COVERED_BY_THEORY and not self.reason:
            raise ValueError("NotCoveredByTheory needs a reason")
        if self.outcome in (Outcome.HOMEOMORPHIC, Outcome.NOT_HOMEOMORPHIC) and not self.theorem:
            raise ValueError(f"{self.outcome.value} needs the theorem that decided it")
        if self.outcome is Outcome.CONSISTENT_AT_DEPTH and self.depth is None:
            raise ValueError("ConsistentAtDepth needs a depth")

    @property
    def homeomorphic(self) -> bool | None:
        if self.outcome is Outcome.HOMEOMORPHIC:
            return True
        if self.outcome is Outcome.NOT_HOMEOMORPHIC:
            return False
        return None

    def to_record(self) -> dict:
        record = {
            "verdict": self.outcome.value,
            "theorem": self.theorem,
            "certificate": self.certificate,
        }
        for key in ("witness_prime", "depth", "reason"):
            value = getattr(self, key)
            if value is not None:
                record[key] = value
        return record
