"""
Constant-time predicates of the linear Splits.

Each one is a closed-form comparison over prefix sums, pot and indices; none
of them loops. Comparisons are strict, so ties keep the later index.
"""
from typing import Sequence

from tour_split.core.exceptions import ContractViolationException
from tour_split.models.params import PenaltyParams
from tour_split.models.tour_data import TourData
from tour_split.splits.state import WarpState


def _require_order(i: int, j: int) -> None:
    if i >= j:
        raise ContractViolationException(f"predicate needs i < j, got i={i}, j={j}")


# ── Pure cost ─────────────────────────────────────────────────────────

def dominates(pot: Sequence[float], data: TourData, i: int, j: int) -> bool:
    """0_i beats 0_j as predecessor of every node both can still reach."""
    _require_order(i, j)
    return (
        pot[i] + data.c_out[i + 1] + data.C[j + 1] - data.C[i + 1]
        < pot[j] + data.c_out[j + 1]
    )


def infeasible_d(data: TourData, i: int, j: int) -> bool:
    return data.D[j] - data.D[i] > data.q


# ── Load profile ──────────────────────────────────────────────────────

def dominates_h(data: TourData, i: int, j: int) -> bool:
    """Position i carries more load than j on any route through both."""
    _require_order(i, j)
    return data.D[j] - data.D[i] > data.P[j] - data.P[i]


def infeasible_h(data: TourData, i: int, j: int, k: int) -> bool:
    """Load of route (i, k] at its peak position j exceeds Q."""
    return data.P[j] - data.P[i] + data.D[k] - data.D[j] > data.q


# ── Time windows ──────────────────────────────────────────────────────

def dominates_a(data: TourData, i: int, j: int) -> bool:
    """Starting at a_i still reaches j after it opens."""
    _require_order(i, j)
    return data.a[i] + data.S[j] - data.S[i] > data.a[j]


def arrival(data: TourData, i: int, j: int, k: int) -> float:
    """A(i, k) given j = wait(i, k)."""
    return max(
        data.t_out[i + 1] + data.S[k] - data.S[i + 1],
        data.a[j] + data.S[k] - data.S[j],
    )


def infeasible_a(data: TourData, i: int, j: int, k: int) -> bool:
    """Service at k starts after min(b_k, T - s_k - t_{k,0}); requires j = wait(i, k)."""
    return arrival(data, i, j, k) > data.latest[k]


def initial_warp(data: TourData, i: int, j: int, x: int) -> float:
    """Lateness at x of a route from i that has not warped before x; > 0 means it warps."""
    return arrival(data, i, j, x) - data.latest[x]


# ── Penalties ─────────────────────────────────────────────────────────

def pen_alpha(data: TourData, params: PenaltyParams, i: int, h: int, x: int) -> float:
    """Capacity penalty of (i, x] whose peak load sits at h."""
    load = data.P[h] - data.P[i] + data.D[x] - data.D[h]
    return params.alpha * max(load - data.q, 0.0)


def pen_alpha_d(data: TourData, params: PenaltyParams, i: int, x: int) -> float:
    return params.alpha * max(0.0, data.D[x] - data.D[i] - data.q)


def pen_beta_a(
    data: TourData, params: PenaltyParams, warp: WarpState, i: int, x: int
) -> float:
    """Warp penalty of (i, x]: first warp r[i] plus all tour warp after q[i]."""
    r = warp.r[i]
    if r > 0:
        return params.beta * (r + data.W[x] - data.W[warp.q[i]])
    return 0.0


# ── Penalized dominance ───────────────────────────────────────────────

def dominates_alpha_p(
    pot: Sequence[float], data: TourData, params: PenaltyParams, i: int, j: int
) -> bool:
    """Penalized 0_i keeps beating 0_j once both carry their peak past Q."""
    _require_order(i, j)
    return (
        pot[i] + data.c_out[i + 1] + data.C[j + 1] - data.C[i + 1]
        + params.alpha * (data.P[j] - data.P[i])
        < pot[j] + data.c_out[j + 1]
    )


def dominates_alpha(
    pot: Sequence[float],
    data: TourData,
    params: PenaltyParams,
    i: int,
    hi: int,
    k: int,
    hk: int,
    x: int,
) -> bool:
    """Direct comparison of predecessors i and k of x with hi, hk their peak positions."""
    return (
        pot[i] + data.c_out[i + 1] + data.C[k + 1] - data.C[i + 1]
        + pen_alpha(data, params, i, hi, x)
        < pot[k] + data.c_out[k + 1] + pen_alpha(data, params, k, hk, x)
    )


def dominates_alpha_d_beta_a(
    pot: Sequence[float],
    data: TourData,
    params: PenaltyParams,
    warp: WarpState,
    i: int,
    j: int,
    x: int,
) -> bool:
    """Direct comparison of predecessors i and j of x under both soft penalties."""
    return (
        pot[i] + data.c_out[i + 1] + data.C[j + 1] - data.C[i + 1]
        + pen_alpha_d(data, params, i, x)
        + pen_beta_a(data, params, warp, i, x)
        < pot[j] + data.c_out[j + 1]
        + pen_alpha_d(data, params, j, x)
        + pen_beta_a(data, params, warp, j, x)
    )
