"""
Brute-force ground truth.

oracle_split relaxes every depot pair (i, j) and prices each route from
scratch with the evaluator, O(n^3) overall. exhaustive_split enumerates all
contiguous partitions of a tiny tour as a second, even simpler check.
"""
import itertools
import math
from typing import List, Optional, Tuple

from tour_split.core.config import settings
from tour_split.core.exceptions import OracleCapException, UsageException
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.params import NO_PENALTY, PenaltyParams
from tour_split.models.result import SplitResult
from tour_split.models.tour_data import TourData
from tour_split.splits import evaluator

EXHAUSTIVE_LIMIT = 12


def oracle_route_scan(
    data: TourData, i: int, j: int, variant: Variant, params: PenaltyParams = NO_PENALTY
) -> Tuple[bool, float]:
    """(admissible, cost) of route (i, j]; soft variants are always admissible."""
    if variant.is_soft:
        return True, evaluator.route_penalized_cost(data, i, j, params, variant)
    return evaluator.route_admissible(data, i, j, variant), evaluator.route_cost(data, i, j)


def oracle_split(
    data: TourData,
    variant: Variant,
    params: PenaltyParams = NO_PENALTY,
    cap: Optional[int] = None,
) -> SplitResult:
    """
    Shortest path over all admissible routes. Ties keep the smallest
    predecessor index.

    Raises:
        OracleCapException: n above the configured cap
        NoFeasibleSplitException: hard variant with no admissible partition
    """
    cap = settings.oracle_cap if cap is None else cap
    n = data.n
    if n > cap:
        raise OracleCapException(n, cap)

    pot = [math.inf] * (n + 1)
    pot[0] = 0.0
    pred = [0] * (n + 1)
    for j in range(1, n + 1):
        for i in range(j):
            if math.isinf(pot[i]):
                continue
            admissible, cost = oracle_route_scan(data, i, j, variant, params)
            if admissible and pot[i] + cost < pot[j]:
                pot[j] = pot[i] + cost
                pred[j] = i

    return SplitResult.from_labels(variant.value, Algorithm.ORACLE.value, pot, pred)


def exhaustive_split(data: TourData) -> Tuple[float, List[int]]:
    """
    Cheapest CVRP partition by enumerating all 2^(n-1) sets of cut positions.

    Returns the cost and the sorted cut positions (route ends, n included);
    the cost is +inf when no partition respects Q.
    """
    n = data.n
    if n > EXHAUSTIVE_LIMIT:
        raise UsageException(f"Exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}")
    if n == 0:
        return 0.0, []

    best, best_cuts = math.inf, []
    for mask in itertools.product((False, True), repeat=n - 1):
        cuts = [pos for pos, cut in enumerate(mask, start=1) if cut] + [n]
        total, start = 0.0, 0
        for end in cuts:
            if evaluator.route_delivery(data, start, end) > data.q:
                total = math.inf
                break
            total += evaluator.route_cost(data, start, end)
            start = end
        if total < best:
            best, best_cuts = total, cuts
    return best, best_cuts
