"""
Bellman-based Splits: for every predecessor i, extend the route (i, j] one
customer at a time and relax pot[j].

The inner loop keeps running cost, load and schedule state, so each arc
costs O(1). Hard variants break as soon as the route turns infeasible
(which stays infeasible for every longer j), soft variants scan every j.
"""
import math

from tour_split.models.enums import Variant
from tour_split.models.params import PenaltyParams
from tour_split.models.result import SplitResult
from tour_split.models.tour_data import TourData

ALGORITHM = "bellman"


def bellman_cvrp(data: TourData) -> SplitResult:
    n, q = data.n, data.q
    c_out, c_in, c_link, d = data.c_out, data.c_in, data.c_link, data.d
    pot = [math.inf] * (n + 1)
    pot[0] = 0.0
    pred = [0] * (n + 1)

    for i in range(n):
        base = pot[i]
        cost = 0.0
        load = 0.0
        for j in range(i + 1, n + 1):
            cost = c_out[j] if j == i + 1 else cost + c_link[j]
            load += d[j]
            if load > q:
                break
            value = base + (cost + c_in[j])
            if value < pot[j]:
                pot[j] = value
                pred[j] = i

    return SplitResult.from_labels(Variant.CVRP.value, ALGORITHM, pot, pred)


def bellman_vrpspdtw(data: TourData) -> SplitResult:
    """
    Hard capacity with pickups and deliveries plus hard time windows.

    Peak load of (i, j] is delivered(i..j) + max over z of (picked(i..z) -
    delivered(i..z)), the max taken incrementally (z = i contributes 0).
    """
    n, q = data.n, data.q
    c_out, c_in, c_link = data.c_out, data.c_in, data.c_link
    t_out, t_link, a, s, latest = data.t_out, data.t_link, data.a, data.s, data.latest
    d, p = data.d, data.p
    pot = [math.inf] * (n + 1)
    pot[0] = 0.0
    pred = [0] * (n + 1)

    for i in range(n):
        base = pot[i]
        cost = start = delivered = picked = gap = 0.0
        for j in range(i + 1, n + 1):
            if j == i + 1:
                cost = c_out[j]
                start = max(t_out[j], a[j])
            else:
                cost += c_link[j]
                start = max(start + s[j - 1] + t_link[j], a[j])
            if start > latest[j]:
                break
            delivered += d[j]
            picked += p[j]
            gap = max(gap, picked - delivered)
            if delivered + gap > q:
                break
            value = base + (cost + c_in[j])
            if value < pot[j]:
                pot[j] = value
                pred[j] = i

    return SplitResult.from_labels(Variant.HARD_SPDTW.value, ALGORITHM, pot, pred)


def bellman_soft_vrpspd(data: TourData, params: PenaltyParams) -> SplitResult:
    """Every route admissible; excess peak load charged at alpha per unit."""
    n, q, alpha = data.n, data.q, params.alpha
    c_out, c_in, c_link, d, p = data.c_out, data.c_in, data.c_link, data.d, data.p
    pot = [math.inf] * (n + 1)
    pot[0] = 0.0
    pred = [0] * (n + 1)

    for i in range(n):
        base = pot[i]
        cost = delivered = picked = gap = 0.0
        for j in range(i + 1, n + 1):
            cost = c_out[j] if j == i + 1 else cost + c_link[j]
            delivered += d[j]
            picked += p[j]
            gap = max(gap, picked - delivered)
            value = base + (cost + c_in[j] + alpha * max(delivered + gap - q, 0.0))
            if value < pot[j]:
                pot[j] = value
                pred[j] = i

    return SplitResult.from_labels(Variant.SOFT_SPD.value, ALGORITHM, pot, pred)


def bellman_soft_vrptw(data: TourData, params: PenaltyParams) -> SplitResult:
    """Every route admissible; excess delivery charged at alpha, time warp at beta."""
    n, q, alpha, beta = data.n, data.q, params.alpha, params.beta
    c_out, c_in, c_link, d = data.c_out, data.c_in, data.c_link, data.d
    t_out, t_link, a, s, latest = data.t_out, data.t_link, data.a, data.s, data.latest
    pot = [math.inf] * (n + 1)
    pot[0] = 0.0
    pred = [0] * (n + 1)

    for i in range(n):
        base = pot[i]
        cost = delivered = departure = warp = 0.0
        for j in range(i + 1, n + 1):
            if j == i + 1:
                cost = c_out[j]
                start = max(t_out[j], a[j])
            else:
                cost += c_link[j]
                start = max(departure + s[j - 1] + t_link[j], a[j])
            late = start - latest[j]
            if late > 0:
                warp += late
                departure = latest[j]
            else:
                departure = start
            delivered += d[j]
            value = base + (
                cost + c_in[j]
                + alpha * max(delivered - q, 0.0)
                + beta * warp
            )
            if value < pot[j]:
                pot[j] = value
                pred[j] = i

    return SplitResult.from_labels(Variant.SOFT_TW.value, ALGORITHM, pot, pred)
