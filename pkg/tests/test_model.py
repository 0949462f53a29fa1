"""
Model tests: instance validation, tour checks, tour projection and prefix
sums, warp prefix, result reconstruction.
"""
import math

import pytest

from tour_split.core.exceptions import (
    CorruptResultException,
    InvalidConfigException,
    InvalidInstanceException,
    InvalidTourException,
    NoFeasibleSplitException,
)
from tour_split.models import (
    Instance,
    OpCounters,
    PenaltyParams,
    Route,
    SplitResult,
    Tour,
    project_tour,
    reconstruct_routes,
)
from tests.helpers import chain_data, chain_instance


# ── Instance ────────────────────────────────────────────────────────────

def _instance(**overrides):
    fields = dict(
        q=10.0,
        horizon=100.0,
        demands=(1.0, 2.0),
        pickups=(0.0, 0.0),
        opens=(0.0, 0.0),
        closes=(50.0, 50.0),
        service=(0.0, 0.0),
        coords=((0.0, 0.0), (3.0, 4.0), (6.0, 8.0)),
    )
    fields.update(overrides)
    return Instance(**fields)


def test_instance_euclidean_arcs_are_rounded():
    inst = _instance(coords=((0.0, 0.0), (1.0, 1.0), (3.0, 4.0)))
    assert inst.cost(0, 2) == 5.0
    assert inst.cost(0, 1) == 1.0          # sqrt(2) rounds to 1
    assert inst.travel_time(1, 0) == inst.cost(1, 0)


def test_instance_unrounded_arcs():
    inst = _instance(coords=((0.0, 0.0), (1.0, 1.0), (3.0, 4.0)), rounding=False)
    assert inst.cost(0, 1) == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize(
    "overrides",
    [
        {"demands": (1.0, -2.0)},
        {"pickups": (0.0,)},
        {"opens": (60.0, 0.0)},
        {"service": (math.nan, 0.0)},
        {"demands": (math.inf, 1.0)},
        {"coords": None},
        {"coords": ((0.0, 0.0), (1.0, 1.0))},
    ],
)
def test_instance_rejects_bad_values(overrides):
    with pytest.raises(InvalidInstanceException):
        _instance(**overrides)


def test_instance_allows_infinite_capacity_horizon_and_closes():
    inst = _instance(q=math.inf, horizon=math.inf, closes=(math.inf, math.inf))
    assert not inst.has_finite_horizon


def test_instance_rejects_wrong_matrix_shape():
    with pytest.raises(InvalidInstanceException):
        _instance(coords=None, cost_matrix=((0.0, 1.0), (1.0, 0.0)))


# ── Tour ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("order", [(1,), (1, 1, 2), (0, 1, 2), (1, 2, 4)])
def test_tour_validate_rejects_non_permutations(order):
    with pytest.raises(InvalidTourException):
        Tour(order).validate(3)


def test_tour_identity():
    assert Tour.identity(3).order == (1, 2, 3)
    Tour.identity(3).validate(3)


# ── Projection ──────────────────────────────────────────────────────────

def test_prefix_sums_of_worked_example(example_data):
    data = example_data
    assert data.n == 10
    assert data.C[:5] == (0.0, 4.0, 7.0, 14.0, 16.0)
    assert data.D[4] == 25.0
    assert data.D[10] == 58.0
    assert data.c_out[1] == 4.0 and data.c_in[10] == 7.0


def test_projection_relabels_along_tour():
    inst, _ = chain_instance((1, 2, 3), (1, 2, 3), (5, 5), (10, 20, 30))
    data = project_tour(inst, Tour((3, 1, 2)))
    assert data.labels == (0, 3, 1, 2)
    assert data.d == (0.0, 30.0, 10.0, 20.0)
    assert data.c_out == (0.0, 3.0, 1.0, 2.0)
    # 3 -> 1 goes through the depot in the chain matrix
    assert data.c_link[2] == 3.0 + 1.0


def test_latest_is_strengthened_deadline():
    data = chain_data(
        (5, 8), (1, 1), (3,), (0, 0), s=(2, 0), b=(math.inf, 20), horizon=10
    )
    # min(b, T - s - t_in)
    assert data.latest == (10.0, 7.0, 9.0)


def test_empty_tour():
    data = chain_data((), (), (), ())
    assert data.n == 0
    assert data.C == (0.0,) and data.W == (0.0,)


# ── Warp prefix ─────────────────────────────────────────────────────────

def test_warp_prefix_small_example():
    # t01=5, s1=2, t12=3, b=(inf, 4, 20), T=100, t_in=(1, 1)
    data = chain_data(
        (5, 8), (1, 1), (3,), (0, 0), s=(2, 0), b=(4, 20), horizon=100
    )
    assert data.W == (0.0, 1.0, 1.0)


def test_warp_prefix_zero_without_deadlines(example_data):
    assert set(example_data.W) == {0.0}


def test_relaxed_projections():
    data = chain_data((5, 8), (1, 1), (3,), (2, 4), p=(1, 1), b=(4, 20), horizon=100)
    open_data = data.without_time_windows()
    assert open_data.W == (0.0, 0.0, 0.0)
    assert all(math.isinf(v) for v in open_data.latest)
    no_pickups = data.without_pickups()
    assert no_pickups.P == (0.0, 0.0, 0.0) and no_pickups.D == data.D


# ── Results ─────────────────────────────────────────────────────────────

def test_reconstruct_routes_in_tour_order():
    pred = [0, 0, 0, 0, 0, 2, 3, 3, 4, 5, 8]
    assert reconstruct_routes(pred, 10) == [Route(0, 4), Route(4, 8), Route(8, 10)]
    assert Route(4, 8).size == 4
    assert list(Route(8, 10).positions) == [9, 10]


def test_reconstruct_routes_rejects_corrupt_chain():
    with pytest.raises(CorruptResultException):
        reconstruct_routes([0, 0, 2], 2)


def test_from_labels_rejects_unreachable_end():
    with pytest.raises(NoFeasibleSplitException) as exc:
        SplitResult.from_labels("cvrp", "bellman", [0.0, 5.0, math.inf], [0, 0, 0])
    assert exc.value.details["position"] == 2


def test_counters_total_excludes_retreats():
    counters = OpCounters(pushes=3, pops=2, cursor_moves=1, cursor_retreats=4)
    assert counters.total == 6
    assert (counters + counters).pops == 4


@pytest.mark.parametrize("alpha,beta", [(-1.0, 0.0), (0.0, math.nan)])
def test_penalty_params_rejects_negative(alpha, beta):
    with pytest.raises(InvalidConfigException):
        PenaltyParams(alpha, beta)
