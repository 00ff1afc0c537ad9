"""Three-valued verdicts and the report value returned by every check."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .powerseries import Interval

# relative allowance for floating-point rounding in equality cases
ROUNDING_SLACK = 1e-13


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INCONCLUSIVE = "INCONCLUSIVE"


def compare(lhs: Interval, rhs: Interval, slack: float = ROUNDING_SLACK) -> Verdict:
    """Decide ``lhs <= rhs`` from two enclosures.

    ``slack`` is relative to the magnitude of the numbers involved and only
    absorbs round-off; tail uncertainty is already inside the intervals.
    """
    tol = slack * max(1.0, abs(lhs.hi), abs(rhs.hi))
    if lhs.hi <= rhs.lo + tol:
        return Verdict.HOLDS
    if lhs.lo > rhs.hi + tol:
        return Verdict.FAILS
    return Verdict.INCONCLUSIVE


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an inequality check ``lhs <= rhs`` or of a sharpness scan."""

    verdict: Verdict
    lhs: Interval
    rhs: Interval
    radius: float | None = None
    predicted_radius: float | None = None
    params: dict = field(default_factory=dict)
    crossover_bracket: tuple[float, float] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    @property
    def margin(self) -> float:
        """``rhs.lo - lhs.hi``; nonnegative when the check holds strictly."""
        return self.rhs.lo - self.lhs.hi

    @property
    def quantity_at_radius(self) -> Interval:
        return self.lhs

    def to_dict(self) -> dict:
        out = {
            "params": dict(self.params),
            "verdict": self.verdict.value,
            "lhs": self.lhs.as_list(),
            "rhs": self.rhs.as_list(),
            "crossover_bracket": list(self.crossover_bracket) if self.crossover_bracket else None,
        }
        if self.radius is not None:
            out["radius"] = self.radius
        if self.predicted_radius is not None:
            out["predicted_radius"] = self.predicted_radius
        if self.notes:
            out["notes"] = dict(self.notes)
        return out


def worst(verdicts) -> Verdict:
    """FAILS beats INCONCLUSIVE beats HOLDS."""
    vs = set(verdicts)
    if Verdict.FAILS in vs:
        return Verdict.FAILS
    if Verdict.INCONCLUSIVE in vs:
        return Verdict.INCONCLUSIVE
    return Verdict.HOLDS
