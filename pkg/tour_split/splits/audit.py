"""
Instrumented-state auditor for the linear Splits.

When an auditor is passed to a linear Split, every queue front, tracked peak
position and first-warp value the algorithm consumes is recomputed from
scratch with the evaluator and compared. Each check is O(route length), so
audited runs are quadratic; they belong in tests and debugging sessions.

Index checks compare positions; when two positions tie on the underlying
value (equal load, equal arrival) the value comparison decides, so float
noise on unrounded distances is not reported as a violation.
"""
from dataclasses import asdict, dataclass, field
from typing import List

from tour_split.core.exceptions import CorrectnessMismatchException
from tour_split.core.logging import get_logger
from tour_split.models.enums import ScheduleMode, Variant
from tour_split.models.params import NO_PENALTY, PenaltyParams
from tour_split.models.tour_data import TourData
from tour_split.splits import evaluator

logger = get_logger(__name__)


@dataclass(frozen=True)
class AuditViolation:
    kind: str           # highest | wait | first_warp | arc_cost | inadmissible
    x: int
    predecessor: int
    expected: float
    actual: float


@dataclass
class StateAuditor:
    data: TourData
    params: PenaltyParams = NO_PENALTY
    tolerance: float = 1e-9
    checks: int = 0
    violations: List[AuditViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def _close(self, expected: float, actual: float) -> bool:
        return abs(expected - actual) <= self.tolerance * (1.0 + abs(expected))

    def _report(self, kind: str, x: int, i: int, expected: float, actual: float) -> None:
        self.violations.append(AuditViolation(kind, x, i, expected, actual))

    def _load_at(self, i: int, z: int, x: int) -> float:
        load = 0.0
        for w in range(i + 1, z + 1):
            load += self.data.p[w]
        for w in range(z + 1, x + 1):
            load += self.data.d[w]
        return load

    def check_highest(self, i: int, h: int, x: int) -> None:
        """h must be the peak-load position of route (i, x]."""
        self.checks += 1
        profile = evaluator.route_load_profile(self.data, i, x)
        if h == profile.highest:
            return
        if not (i <= h <= x) or not self._close(profile.max_load, self._load_at(i, h, x)):
            self._report("highest", x, i, profile.highest, h)

    def check_wait(self, i: int, j: int, x: int) -> None:
        """j must be wait(i, x); equivalently it must reproduce the start time at x."""
        self.checks += 1
        expected = evaluator.route_wait(self.data, i, x)
        if j == expected:
            return
        start = evaluator.route_schedule(self.data, i, x, ScheduleMode.HARD).start_times[-1]
        data = self.data
        via_j = max(
            data.t_out[i + 1] + data.S[x] - data.S[i + 1],
            data.a[j] + data.S[x] - data.S[j],
        )
        if not (i < j <= x) or not self._close(start, via_j):
            self._report("wait", x, i, expected, j)

    def check_first_warp(self, i: int, r: float, x: int) -> None:
        """r > 0 must be the first warp of (i, x] and happen at x; r <= 0 means no warp yet."""
        self.checks += 1
        first = evaluator.route_first_warp(self.data, i, x)
        scale = self.tolerance * (1.0 + abs(r))
        if r > scale:
            if first is None or first.position != x or not self._close(first.magnitude, r):
                self._report("first_warp", x, i, first.magnitude if first else 0.0, r)
        elif r <= 0 and first is not None and first.magnitude > scale:
            self._report("first_warp", x, i, first.magnitude, r)

    def check_arc(self, variant: Variant, i: int, x: int, cost: float) -> None:
        """
        Constant-time arc cost must match the evaluator's route cost, and under
        hard constraints the chosen route must be admissible.
        """
        self.checks += 1
        if variant.is_soft:
            expected = evaluator.route_penalized_cost(self.data, i, x, self.params, variant)
        else:
            expected = evaluator.route_cost(self.data, i, x)
            if not evaluator.route_admissible(self.data, i, x, variant):
                self._report("inadmissible", x, i, expected, cost)
        if not self._close(expected, cost):
            self._report("arc_cost", x, i, expected, cost)

    def raise_on_violation(self) -> None:
        if self.violations:
            first = self.violations[0]
            logger.error(
                "audit_failed",
                violations=len(self.violations),
                checks=self.checks,
                kind=first.kind,
                x=first.x,
                predecessor=first.predecessor,
            )
            raise CorrectnessMismatchException(
                f"{len(self.violations)} audit violation(s); first: {first.kind} "
                f"at x={first.x} for predecessor {first.predecessor}",
                details=[asdict(v) for v in self.violations[:20]],
            )
