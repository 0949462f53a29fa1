"""
Direct route evaluation.

Every function here walks the route (i, j] position by position using only
the per-position arrays of TourData (never the prefix sums), so it can serve
as ground truth for the oracle, the auditor and the tests. All of them are
O(j - i).

Route (i, j] is the trip depot, i+1, ..., j, depot.
"""
from typing import NamedTuple, Optional, Tuple

from tour_split.core.exceptions import InvalidIntervalException, UsageException
from tour_split.models.enums import ScheduleMode, Variant
from tour_split.models.params import PenaltyParams
from tour_split.models.tour_data import TourData


class LoadProfile(NamedTuple):
    highest: int        # position of the peak load, latest one on ties (i = depot departure)
    max_load: float
    feasible: bool


class Schedule(NamedTuple):
    start_times: Tuple[float, ...]  # A(i, z) for z = i+1..j, before warp is removed
    warps: Tuple[float, ...]        # B(i, z); all zero in hard mode
    feasible: bool
    total_warp: float


class FirstWarp(NamedTuple):
    position: int
    magnitude: float


class RouteSummary(NamedTuple):
    start: int
    end: int
    cost: float
    delivery: float
    max_load: float
    time_feasible: bool
    total_warp: float


def _check_interval(data: TourData, i: int, j: int) -> None:
    if not 0 <= i < j <= data.n:
        raise InvalidIntervalException(i, j, data.n)


def route_cost(data: TourData, i: int, j: int) -> float:
    """c(i,j) = c_{0,i+1} + sum_{x=i+2..j} c_{x-1,x} + c_{j,0}, summed arc by arc."""
    _check_interval(data, i, j)
    cost = data.c_out[i + 1]
    for x in range(i + 2, j + 1):
        cost += data.c_link[x]
    return cost + data.c_in[j]


def route_cost_prefix(data: TourData, i: int, j: int) -> float:
    """Constant-time form c_{0,i+1} + C[j] - C[i+1] + c_{j,0}."""
    _check_interval(data, i, j)
    return data.c_out[i + 1] + data.C[j] - data.C[i + 1] + data.c_in[j]


def route_delivery(data: TourData, i: int, j: int) -> float:
    """Total delivery demand of the route (the CVRP load)."""
    _check_interval(data, i, j)
    total = 0.0
    for z in range(i + 1, j + 1):
        total += data.d[z]
    return total


def route_load_profile(data: TourData, i: int, j: int) -> LoadProfile:
    """
    Scan load(i, z, j) = pickups collected up to z + deliveries still on board
    after z, for z = i..j, and return the peak.
    """
    load = route_delivery(data, i, j)
    highest, max_load = i, load
    for z in range(i + 1, j + 1):
        load = load - data.d[z] + data.p[z]
        if load >= max_load:
            highest, max_load = z, load
    return LoadProfile(highest, max_load, max_load <= data.q)


def route_schedule(
    data: TourData, i: int, j: int, mode: ScheduleMode = ScheduleMode.HARD
) -> Schedule:
    """
    Service start times along the route.

    hard: A(i,i+1) = max(t_{0,i+1}, a_{i+1}) and
          A(i,z) = max(A(i,z-1) + s_{z-1} + t_{z-1,z}, a_z);
          feasible iff every A(i,z) <= min(b_z, T - s_z - t_{z,0}).
    warp: the same recursion on A - B, where B(i,z) = max(0, A(i,z) - deadline)
          is the warp charged at z.
    """
    _check_interval(data, i, j)
    starts, warps = [], []
    feasible = True
    total_warp = 0.0
    departure = 0.0
    for z in range(i + 1, j + 1):
        arrival = data.t_out[z] if z == i + 1 else departure + data.s[z - 1] + data.t_link[z]
        start = max(arrival, data.a[z])
        limit = data.latest[z]
        warp = 0.0
        if start > limit:
            if mode is ScheduleMode.HARD:
                feasible = False
            else:
                warp = start - limit
                total_warp += warp
        starts.append(start)
        warps.append(warp)
        departure = limit if warp > 0 else start
    if mode is ScheduleMode.WARP:
        feasible = total_warp == 0.0
    return Schedule(tuple(starts), tuple(warps), feasible, total_warp)


def route_wait(data: TourData, i: int, j: int) -> int:
    """
    Smallest y in (i, j] such that leaving y right at its opening time still
    reaches every later z after its opening: a_y + dist(y, z) > a_z.

    Scans backward keeping M = max over z > y of (a_z - dist(y, z)).
    """
    _check_interval(data, i, j)
    wait = j
    best = -float("inf")
    for y in range(j - 1, i, -1):
        step = data.s[y] + data.t_link[y + 1]
        best = max(data.a[y + 1], best) - step
        if data.a[y] > best:
            wait = y
    return wait


def route_first_warp(data: TourData, i: int, j: int) -> Optional[FirstWarp]:
    """First position where the warped schedule of (i, j] jumps back, if any."""
    schedule = route_schedule(data, i, j, ScheduleMode.WARP)
    for offset, warp in enumerate(schedule.warps):
        if warp > 0:
            return FirstWarp(i + 1 + offset, warp)
    return None


def route_admissible(data: TourData, i: int, j: int, variant: Variant) -> bool:
    """Arc admissibility of the hard variants; soft variants admit every route."""
    if variant is Variant.CVRP:
        return route_delivery(data, i, j) <= data.q
    if variant is Variant.HARD_SPDTW:
        return (
            route_load_profile(data, i, j).feasible
            and route_schedule(data, i, j, ScheduleMode.HARD).feasible
        )
    _check_interval(data, i, j)
    return True


def route_penalized_cost(
    data: TourData, i: int, j: int, params: PenaltyParams, variant: Variant
) -> float:
    """
    soft-spd: c(i,j) + alpha * max(peak load - Q, 0)
    soft-tw:  c(i,j) + alpha * max(deliveries - Q, 0) + beta * total warp
    """
    cost = route_cost(data, i, j)
    if variant is Variant.SOFT_SPD:
        excess = route_load_profile(data, i, j).max_load - data.q
        return cost + params.alpha * max(excess, 0.0)
    if variant is Variant.SOFT_TW:
        excess = route_delivery(data, i, j) - data.q
        warp = route_schedule(data, i, j, ScheduleMode.WARP).total_warp
        return cost + params.alpha * max(excess, 0.0) + params.beta * warp
    raise UsageException(f"No penalized cost for variant '{variant.value}'")


def route_summary(data: TourData, i: int, j: int) -> RouteSummary:
    profile = route_load_profile(data, i, j)
    return RouteSummary(
        start=i,
        end=j,
        cost=route_cost(data, i, j),
        delivery=route_delivery(data, i, j),
        max_load=profile.max_load,
        time_feasible=route_schedule(data, i, j, ScheduleMode.HARD).feasible,
        total_warp=route_schedule(data, i, j, ScheduleMode.WARP).total_warp,
    )
