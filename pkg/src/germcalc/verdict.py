"""Three-valued verdicts and the shared query budget."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

DEFAULT_ENUM_BUDGET = 64
DEFAULT_CURVE_BUDGET = 256


class Outcome(enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Outcome plus a JSON-ready witness (polynomials as canonical text)."""

    outcome: Outcome
    witness: dict = field(default_factory=dict)
    budget_consumed: dict = field(default_factory=dict)

    @classmethod
    def unknown(cls, reason: str, consumed: dict | None = None, extra: dict | None = None) -> "Verdict":
        w = {"kind": "budget", "reason": reason}
        if extra:
            w.update(extra)
        return cls(Outcome.UNKNOWN, w, dict(consumed or {}))

    @property
    def proved(self) -> bool:
        return self.outcome is Outcome.PROVED

    @property
    def refuted(self) -> bool:
        return self.outcome is Outcome.REFUTED

    @property
    def unknown_(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    def conclusive(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def to_json(self) -> dict:
        return {"outcome": self.outcome.value, "witness": self.witness, "budget_consumed": self.budget_consumed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        return cls(Outcome(data["outcome"]), data.get("witness", {}), data.get("budget_consumed", {}))


class Budget:
    """Limits for one query: pair reductions per basis, fin(I) subsets, curve candidates.

    The gb limit applies to each basis computation separately; totals of what
    was spent accumulate in :attr:`consumed`.
    """

    def __init__(self, gb: int = 10_000, enum: int = DEFAULT_ENUM_BUDGET, curve: int = DEFAULT_CURVE_BUDGET):
        self.gb = gb
        self.enum = enum
        self.curve = curve
        self.consumed = {"gb": 0, "enum": 0, "curve": 0}

    def fresh(self) -> "Budget":
        return Budget(self.gb, self.enum, self.curve)

    def step_budget(self):
        from .groebner import StepBudget

        return _TrackedStepBudget(self, StepBudget(self.gb))

    def add(self, key: str, n: int = 1):
        self.consumed[key] = self.consumed.get(key, 0) + n

    def snapshot(self) -> dict:
        return dict(self.consumed)


class _TrackedStepBudget:
    """A StepBudget that reports its spending back to the owning Budget."""

    def __init__(self, owner: Budget, inner):
        self.owner = owner
        self.inner = inner

    @property
    def consumed(self) -> int:
        return self.inner.consumed

    @property
    def max_pair_reductions(self) -> int:
        return self.inner.max_pair_reductions

    def charge(self):
        self.inner.charge()
        self.owner.add("gb")


def combine(verdicts) -> Outcome:
    """Conjunction: Proved iff all Proved, Refuted iff any Refuted."""
    verdicts = list(verdicts)
    if any(v.refuted for v in verdicts):
        return Outcome.REFUTED
    if all(v.proved for v in verdicts):
        return Outcome.PROVED
    return Outcome.UNKNOWN
