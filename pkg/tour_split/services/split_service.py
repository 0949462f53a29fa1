"""
Split service - runs one Split on one instance and tour.

1. Project the instance along the tour (optionally dropping windows or pickups)
2. Look the Split up in the registry and run it, audited when configured
3. Optionally re-solve with the oracle and compare costs
4. Check the deque work against the linear bound
"""
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional

from tour_split.core.config import settings
from tour_split.core.exceptions import CorrectnessMismatchException
from tour_split.core.logging import get_logger
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.instance import Instance, Tour
from tour_split.models.params import NO_PENALTY, PenaltyParams
from tour_split.models.result import SplitResult
from tour_split.models.tour_data import TourData, project_tour
from tour_split.splits import evaluator
from tour_split.splits.audit import StateAuditor
from tour_split.splits.oracle import oracle_split
from tour_split.splits.registry import run_split

logger = get_logger(__name__)

# Deque operations per customer allowed to each linear Split (plus 2)
COUNTER_SLOPE: Dict[Variant, int] = {
    Variant.CVRP: 2,
    Variant.HARD_SPDTW: 6,
    Variant.SOFT_SPD: 5,
    Variant.SOFT_TW: 6,
}


def counter_bound(variant: Variant, n: int) -> int:
    return COUNTER_SLOPE[variant] * n + 2


def costs_agree(left: float, right: float, tolerance: float = 1e-9) -> bool:
    """Exact on integer data; relative tolerance otherwise."""
    return left == right or abs(left - right) <= tolerance * max(1.0, abs(left), abs(right))


def check_counter_bound(result: SplitResult, variant: Variant) -> None:
    """
    Raises:
        CorrectnessMismatchException: the run did more deque work than
            its linear bound allows, or moved a cursor back more often
            than it removed elements
    """
    bound = counter_bound(variant, result.n)
    if result.counters.total > bound:
        raise CorrectnessMismatchException(
            f"{result.algorithm} {variant.value} did {result.counters.total} deque "
            f"operations on n={result.n}, bound is {bound}",
            details={"counters": asdict(result.counters), "bound": bound},
        )
    counters = result.counters
    if counters.cursor_retreats > counters.pops:
        raise CorrectnessMismatchException(
            f"{result.algorithm} {variant.value} moved a cursor back "
            f"{counters.cursor_retreats} times but removed only {counters.pops} elements",
            details={"counters": asdict(counters)},
        )


@dataclass(frozen=True)
class RouteLine:
    """One route as printed by the CLI."""

    start: int
    end: int
    customers: List[int]
    summary: evaluator.RouteSummary


@dataclass
class SplitOutcome:
    data: TourData
    result: SplitResult
    oracle: Optional[SplitResult] = None
    auditor: Optional[StateAuditor] = None

    @property
    def agrees(self) -> Optional[bool]:
        if self.oracle is None:
            return None
        return costs_agree(self.result.total_cost, self.oracle.total_cost)

    def route_lines(self) -> List[RouteLine]:
        labels = self.data.labels
        return [
            RouteLine(
                start=route.start,
                end=route.end,
                customers=[labels[pos] for pos in route.positions],
                summary=evaluator.route_summary(self.data, route.start, route.end),
            )
            for route in self.result.routes
        ]


class SplitService:
    """Runs a registered Split with optional oracle check and state audit."""

    def prepare(
        self,
        instance: Instance,
        tour: Tour,
        no_windows: bool = False,
        no_pickups: bool = False,
    ) -> TourData:
        data = project_tour(instance, tour)
        if no_windows:
            data = data.without_time_windows()
        if no_pickups:
            data = data.without_pickups()
        return data

    def run(
        self,
        data: TourData,
        variant: Variant,
        algorithm: Algorithm,
        params: PenaltyParams = NO_PENALTY,
        check: bool = False,
        audit: Optional[bool] = None,
    ) -> SplitOutcome:
        """
        Run one Split.

        Raises:
            OracleCapException: check requested above the oracle cap
            CorrectnessMismatchException: oracle disagrees, an audit found
                a stale queue value, or the linear bound was exceeded
            NoFeasibleSplitException: hard variant with no admissible partition
        """
        variant, algorithm = Variant(variant), Algorithm(algorithm)
        audit = settings.audit_linear if audit is None else audit
        auditor = None
        if audit and algorithm in (Algorithm.LINEAR, Algorithm.GENERALIZED):
            auditor = StateAuditor(data, params)

        result = run_split(data, variant, algorithm, params, auditor)
        outcome = SplitOutcome(data=data, result=result, auditor=auditor)

        if auditor is not None:
            auditor.raise_on_violation()
        if algorithm is Algorithm.LINEAR:
            check_counter_bound(result, variant)

        if check:
            outcome.oracle = oracle_split(data, variant, params)
            if not outcome.agrees:
                logger.error(
                    "oracle_mismatch",
                    variant=variant.value,
                    algorithm=algorithm.value,
                    cost=result.total_cost,
                    oracle_cost=outcome.oracle.total_cost,
                )
                raise CorrectnessMismatchException(
                    f"{algorithm.value} cost {result.total_cost} differs from "
                    f"oracle cost {outcome.oracle.total_cost}",
                    details={
                        "variant": variant.value,
                        "cost": result.total_cost,
                        "oracle_cost": outcome.oracle.total_cost,
                    },
                )

        logger.info(
            "split_completed",
            variant=variant.value,
            algorithm=algorithm.value,
            n=data.n,
            cost=result.total_cost,
            routes=len(result.routes),
            deque_ops=result.counters.total,
            audited=auditor is not None,
            checked=check,
        )
        return outcome
