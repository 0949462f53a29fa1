"""
Linear-time Splits.

All four keep the candidate predecessors of the current node 0_x in a
CursorDeque sorted so that each one dominates every later one; the answer
for x is read at the front (or at a cursor), and every index enters and
leaves each queue at most once. Auxiliary queues track the peak-load
position (highs) and the last forced-wait customer (waits) of the front
predecessor in O(1) amortized time.

Passing a StateAuditor re-checks every consumed value with the evaluator.
"""
import math
from typing import Callable, List, Optional

from tour_split.core.exceptions import InvalidInstanceException, NoFeasibleSplitException
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.params import PenaltyParams
from tour_split.models.result import OpCounters, SplitResult
from tour_split.models.tour_data import TourData
from tour_split.splits import evaluator
from tour_split.splits.audit import StateAuditor
from tour_split.splits.cursor_deque import CursorDeque
from tour_split.splits.dominance import (
    dominates,
    dominates_a,
    dominates_alpha,
    dominates_alpha_d_beta_a,
    dominates_alpha_p,
    dominates_h,
    infeasible_a,
    infeasible_d,
    infeasible_h,
    initial_warp,
    pen_alpha,
    pen_alpha_d,
    pen_beta_a,
)
from tour_split.splits.state import HighestState, WarpState

ALGORITHM = Algorithm.LINEAR.value

ArcPredicate = Callable[[int, int], bool]


def _cost(data: TourData, i: int, x: int) -> float:
    return data.c_out[i + 1] + data.C[x] - data.C[i + 1] + data.c_in[x]


def _labels(n: int):
    pot: List[float] = [math.inf] * (n + 1)
    pot[0] = 0.0
    return pot, [0] * (n + 1)


def _total(*queues: CursorDeque) -> OpCounters:
    counters = OpCounters()
    for queue in queues:
        counters = counters + queue.counters()
    return counters


def _pop_back_dominated(queue: CursorDeque, pot: List[float], data: TourData, x: int) -> None:
    while queue.not_empty() and not dominates(pot, data, queue.back(), x - 1):
        queue.remove_back()


def _no_predecessor(x: int) -> NoFeasibleSplitException:
    return NoFeasibleSplitException(
        f"No admissible route ends at position {x} (singleton infeasible)",
        details={"position": x},
    )


# ── Arc predicates for the generalized Split ──────────────────────────

def capacity_arc(data: TourData) -> ArcPredicate:
    """CVRP admissibility in O(1): deliveries of (i, x] fit in Q."""
    return lambda i, x: not infeasible_d(data, i, x)


def evaluator_arc(data: TourData, variant: Variant) -> ArcPredicate:
    """Admissibility re-evaluated route by route; O(route length), for cross-checks only."""
    return lambda i, x: evaluator.route_admissible(data, i, x, variant)


# ── Hard variants ─────────────────────────────────────────────────────

def generalized_split(
    data: TourData,
    is_arc: ArcPredicate,
    variant: Variant = Variant.CVRP,
    auditor: Optional[StateAuditor] = None,
) -> SplitResult:
    """
    Queue-based Split for any arc set where shortening a feasible route from
    either end keeps it feasible and every singleton is an arc.
    """
    n = data.n
    pot, pred = _labels(n)
    queue = CursorDeque(n + 1)

    for x in range(1, n + 1):
        _pop_back_dominated(queue, pot, data, x)
        queue.insert_back(x - 1)
        while not is_arc(queue.front(), x):
            queue.remove_front()
            if not queue.not_empty():
                raise _no_predecessor(x)
        front = queue.front()
        cost = _cost(data, front, x)
        if auditor is not None:
            auditor.check_arc(variant, front, x, cost)
        pot[x] = pot[front] + cost
        pred[x] = front

    return SplitResult.from_labels(
        variant.value, Algorithm.GENERALIZED.value, pot, pred, _total(queue)
    )


def linear_cvrp(data: TourData, auditor: Optional[StateAuditor] = None) -> SplitResult:
    n = data.n
    pot, pred = _labels(n)
    queue = CursorDeque(n + 1)

    for x in range(1, n + 1):
        _pop_back_dominated(queue, pot, data, x)
        queue.insert_back(x - 1)
        while infeasible_d(data, queue.front(), x):
            queue.remove_front()
            if not queue.not_empty():
                raise _no_predecessor(x)
        front = queue.front()
        cost = _cost(data, front, x)
        if auditor is not None:
            auditor.check_arc(Variant.CVRP, front, x, cost)
        pot[x] = pot[front] + cost
        pred[x] = front

    return SplitResult.from_labels(Variant.CVRP.value, ALGORITHM, pot, pred, _total(queue))


def linear_vrpspdtw(data: TourData, auditor: Optional[StateAuditor] = None) -> SplitResult:
    """
    Hard pickup-and-delivery with time windows. highs.front() is the peak-load
    position and waits.front() the wait customer of route (queue.front(), x], which
    makes both feasibility tests constant time.
    """
    n = data.n
    pot, pred = _labels(n)
    queue = CursorDeque(n + 1)
    highs = CursorDeque(n + 1)
    waits = CursorDeque(n + 1)
    highs.insert_back(0)

    for x in range(1, n + 1):
        _pop_back_dominated(queue, pot, data, x)
        queue.insert_back(x - 1)
        while highs.not_empty() and not dominates_h(data, highs.back(), x):
            highs.remove_back()
        highs.insert_back(x)
        while waits.not_empty() and not dominates_a(data, waits.back(), x):
            waits.remove_back()
        waits.insert_back(x)

        front = queue.front()
        # a depot copy can be the peak position, never a waiting customer
        while highs.front() < front:
            highs.remove_front()
        while waits.front() <= front:
            waits.remove_front()

        while True:
            if auditor is not None:
                auditor.check_highest(front, highs.front(), x)
                auditor.check_wait(front, waits.front(), x)
            if not (
                infeasible_h(data, front, highs.front(), x)
                or infeasible_a(data, front, waits.front(), x)
            ):
                break
            queue.remove_front()
            if not queue.not_empty():
                raise _no_predecessor(x)
            front = queue.front()
            while highs.front() < front:
                highs.remove_front()
            while waits.front() <= front:
                waits.remove_front()

        cost = _cost(data, front, x)
        if auditor is not None:
            auditor.check_arc(Variant.HARD_SPDTW, front, x, cost)
        pot[x] = pot[front] + cost
        pred[x] = front

    return SplitResult.from_labels(
        Variant.HARD_SPDTW.value, ALGORITHM, pot, pred, _total(queue, highs, waits)
    )


# ── Soft variants ─────────────────────────────────────────────────────

def linear_soft_vrpspd(
    data: TourData, params: PenaltyParams, auditor: Optional[StateAuditor] = None
) -> SplitResult:
    """
    Soft capacity with pickups and deliveries.

    The answer sits at the best cursor: predecessors in front of it are
    penalized and dominated on the penalized comparison, predecessors behind
    it are unpenalized and still sorted by plain cost. h[i] tracks the
    peak-load position of route (i, x] for predecessors at or in front of
    best; the highs queue serves the peak of (next, x].
    """
    n = data.n
    pot, pred = _labels(n)
    h = HighestState.initial(n).h
    queue = CursorDeque(n + 1)
    highs = CursorDeque(n + 1)
    highs.insert_back(0)

    def drop_dominated_before_best() -> None:
        while queue.has_prev() and not dominates_alpha_p(pot, data, params, queue.prev(), queue.best):
            queue.remove_prev()

    def sync_highs() -> None:
        if queue.has_next():
            nxt = queue.next()
            while highs.front() < nxt:
                highs.remove_front()

    def best_beats_next(nxt: int) -> bool:
        best = queue.best
        if auditor is not None:
            auditor.check_highest(best, h[best], x)
            auditor.check_highest(nxt, highs.front(), x)
        return dominates_alpha(pot, data, params, best, h[best], nxt, highs.front(), x)

    def advance_best(nxt: int) -> None:
        h[nxt] = highs.front()
        queue.move_next()
        drop_dominated_before_best()

    for x in range(1, n + 1):
        while queue.not_empty() and not dominates(pot, data, queue.back(), x - 1):
            if queue.best == queue.back():
                queue.best = None
            queue.remove_back()
        queue.insert_back(x - 1)
        if queue.best is None:
            queue.best = queue.back()
            drop_dominated_before_best()

        while highs.not_empty() and not dominates_h(data, highs.back(), x):
            highs.remove_back()
        highs.insert_back(x)

        # x became the new peak of (best, x]: pull best forward while the
        # same happens to its predecessors
        if not dominates_h(data, h[queue.best], x):
            h[queue.best] = x
            while queue.has_prev() and not dominates_h(data, h[queue.prev()], x):
                h[queue.prev()] = x
                queue.move_prev()
                queue.remove_next()
            if queue.has_prev() and dominates_alpha(
                pot, data, params, queue.prev(), h[queue.prev()], queue.best, h[queue.best], x
            ):
                queue.move_prev()
                queue.remove_next()

        sync_highs()
        while queue.has_next() and pen_alpha(data, params, queue.next(), highs.front(), x) > 0:
            nxt = queue.next()
            if best_beats_next(nxt):
                queue.remove_next()
            else:
                advance_best(nxt)
            sync_highs()
        if queue.has_next():
            nxt = queue.next()
            if not best_beats_next(nxt):
                advance_best(nxt)

        best = queue.best
        if auditor is not None:
            auditor.check_highest(best, h[best], x)
        cost = _cost(data, best, x) + pen_alpha(data, params, best, h[best], x)
        if auditor is not None:
            auditor.check_arc(Variant.SOFT_SPD, best, x, cost)
        pot[x] = pot[best] + cost
        pred[x] = best

    return SplitResult.from_labels(
        Variant.SOFT_SPD.value, ALGORITHM, pot, pred, _total(queue, highs)
    )


def linear_soft_vrptw(
    data: TourData, params: PenaltyParams, auditor: Optional[StateAuditor] = None
) -> SplitResult:
    """
    Soft capacity (deliveries only) plus time warp.

    feas marks the oldest predecessor of x that pays no penalty, no_warp the
    oldest one whose route has not warped yet. For predecessors that did
    warp, r and q hold the first warp and its position; later warp is read
    off the tour-wide prefix W.

    Raises:
        InvalidInstanceException: a singleton route is penalized
    """
    n = data.n
    pot, pred = _labels(n)
    warp = WarpState.empty(n)
    queue = CursorDeque(n + 1)
    waits = CursorDeque(n + 1)

    def penalty(i: int) -> float:
        return pen_alpha_d(data, params, i, x) + pen_beta_a(data, params, warp, i, x)

    def beats(i: int, j: int) -> bool:
        return dominates_alpha_d_beta_a(pot, data, params, warp, i, j, x)

    def sync_waits() -> None:
        while waits.front() <= queue.no_warp:
            waits.remove_front()

    def measure_warp() -> None:
        i, j = queue.no_warp, waits.front()
        if auditor is not None:
            auditor.check_wait(i, j, x)
        warp.r[i] = max(0.0, initial_warp(data, i, j, x))
        if auditor is not None:
            auditor.check_first_warp(i, warp.r[i], x)

    def drop_dominated_before_feas() -> None:
        while queue.feas_has_prev() and not beats(queue.feas_prev(), queue.feas):
            if queue.no_warp == queue.feas_prev():
                # hand no_warp to feas so no unmeasured predecessor is skipped
                queue.no_warp = queue.feas
            queue.remove_feas_prev()

    def release(v: int) -> None:
        # move cursors off an element about to leave the front
        if queue.no_warp == v:
            if queue.no_warp_has_next():
                queue.move_no_warp_next()
            else:
                queue.no_warp = None
        if queue.feas == v:
            if queue.feas_has_next():
                queue.move_feas_next()
            else:
                queue.feas = None

    for x in range(1, n + 1):
        while queue.not_empty() and not dominates(pot, data, queue.back(), x - 1):
            back = queue.back()
            if queue.feas == back:
                queue.feas = None
            if queue.no_warp == back:
                queue.no_warp = None
            queue.remove_back()
        queue.insert_back(x - 1)
        if queue.feas is None:
            queue.feas = queue.back()
        if queue.no_warp is None:
            queue.no_warp = queue.feas

        while waits.not_empty() and not dominates_a(data, waits.back(), x):
            waits.remove_back()
        waits.insert_back(x)
        sync_waits()

        measure_warp()
        while warp.r[queue.no_warp] > 0:
            warp.q[queue.no_warp] = x
            if not queue.no_warp_has_next():
                raise InvalidInstanceException(
                    f"Singleton route to position {x} warps by {warp.r[queue.no_warp]}",
                    details={"position": x},
                )
            queue.move_no_warp_next()
            sync_waits()
            measure_warp()

        while penalty(queue.feas) > 0:
            drop_dominated_before_feas()
            if not queue.feas_has_next():
                raise InvalidInstanceException(
                    f"Singleton route to position {x} exceeds capacity",
                    details={"position": x},
                )
            queue.move_feas_next()
        drop_dominated_before_feas()

        # at most one predecessor penalized on both counts survives at the front
        while (
            queue.size() > 1
            and pen_alpha_d(data, params, queue.front2(), x) > 0
            and pen_beta_a(data, params, warp, queue.front2(), x) > 0
        ):
            if beats(queue.front(), queue.front2()):
                release(queue.front2())
                queue.remove_front2()
            else:
                release(queue.front())
                queue.remove_front()
        if queue.size() > 1 and not beats(queue.front(), queue.front2()):
            release(queue.front())
            queue.remove_front()

        front = queue.front()
        cost = _cost(data, front, x) + penalty(front)
        if auditor is not None:
            auditor.check_arc(Variant.SOFT_TW, front, x, cost)
        pot[x] = pot[front] + cost
        pred[x] = front

    return SplitResult.from_labels(
        Variant.SOFT_TW.value, ALGORITHM, pot, pred, _total(queue, waits)
    )
