"""
Linear Split tests.

Costs are compared against the oracle and Bellman; predecessors are not,
because the linear Splits keep the later index on ties.
"""
import itertools
import math
from dataclasses import replace

import pytest

from tour_split.core.exceptions import (
    CorrectnessMismatchException,
    InvalidInstanceException,
    NoFeasibleSplitException,
)
from tour_split.models import Algorithm, PenaltyParams, Variant
from tour_split.services.split_service import SplitService, check_counter_bound, counter_bound
from tour_split.splits import evaluator
from tour_split.splits.audit import StateAuditor
from tour_split.splits.bellman import bellman_cvrp, bellman_soft_vrptw
from tour_split.splits.linear import (
    capacity_arc,
    evaluator_arc,
    generalized_split,
    linear_cvrp,
    linear_soft_vrpspd,
    linear_soft_vrptw,
    linear_vrpspdtw,
)
from tour_split.splits.oracle import oracle_split
from tests.conftest import EXAMPLE_POT, FAST_SIZES, SIZES
from tests.helpers import chain_data, generated_data, grid_data, same_cost

PARAMS = PenaltyParams(alpha=10.0, beta=10.0)
CELLS = [(1, 1), (2, 5), (10, 100)]
RATES = (0.1, 1.0, 10.0)

# Capacity as tight as the largest demand, so capacity-only penalties are common
TIGHT_Q = 40


def _penalty_cases():
    cases = [(Variant.CVRP, PARAMS), (Variant.HARD_SPDTW, PARAMS)]
    cases += [(Variant.SOFT_SPD, PenaltyParams(alpha=alpha)) for alpha in RATES]
    cases += [
        (Variant.SOFT_TW, PenaltyParams(alpha=alpha, beta=beta))
        for alpha, beta in itertools.product(RATES, RATES)
    ]
    return cases


def _run(data, variant, params=PARAMS, auditor=None):
    if variant is Variant.CVRP:
        return linear_cvrp(data, auditor)
    if variant is Variant.HARD_SPDTW:
        return linear_vrpspdtw(data, auditor)
    if variant is Variant.SOFT_SPD:
        return linear_soft_vrpspd(data, params, auditor)
    return linear_soft_vrptw(data, params, auditor)


def _data(variant, n, seed, q_mult=1, b_mult=1):
    if variant is Variant.CVRP:
        return generated_data(n, seed, extend=False, q_mult=q_mult)
    return grid_data(n, seed, q_mult=q_mult, b_mult=b_mult)


# ── Worked example ──────────────────────────────────────────────────────

@pytest.mark.parametrize("split", [linear_cvrp, linear_vrpspdtw])
def test_worked_example(example_data, split):
    result = split(example_data)
    assert result.pot == tuple(float(v) for v in EXAMPLE_POT)
    assert result.total_cost == 88.0
    assert len(result.routes) == 3


def test_generalized_on_worked_example(example_data):
    result = generalized_split(example_data, capacity_arc(example_data))
    assert result.pot == tuple(float(v) for v in EXAMPLE_POT)
    assert result.algorithm == "generalized"
    audited = generalized_split(
        example_data, evaluator_arc(example_data, Variant.HARD_SPDTW), Variant.HARD_SPDTW
    )
    assert audited.total_cost == 88.0
    assert audited.variant == "spdtw"


def test_empty_tour():
    data = chain_data((), (), (), ())
    for variant in Variant:
        result = _run(data, variant)
        assert result.total_cost == 0.0 and result.routes == ()


# ── Against the oracle ──────────────────────────────────────────────────

@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("q_mult,b_mult", CELLS)
@pytest.mark.parametrize("n", FAST_SIZES)
def test_matches_oracle(variant, n, q_mult, b_mult):
    for seed in range(3):
        data = _data(variant, n, seed, q_mult, b_mult)
        result = _run(data, variant)
        oracle = oracle_split(data, variant, PARAMS)
        assert result.pot == oracle.pot, (variant, n, seed)


@pytest.mark.slow
@pytest.mark.parametrize("variant,params", _penalty_cases())
def test_matches_oracle_many_seeds(variant, params):
    for seed in range(200):
        n = SIZES[seed % len(SIZES)]
        q_mult, b_mult = CELLS[seed % len(CELLS)]
        data = _data(variant, n, seed, q_mult, b_mult)
        result = _run(data, variant, params)
        oracle = oracle_split(data, variant, params)
        assert all(same_cost(got, want) for got, want in zip(result.pot, oracle.pot)), (n, seed)


# ── Soft time windows under tight capacity ──────────────────────────────

def _reevaluated(data, result, params, variant):
    return sum(
        evaluator.route_penalized_cost(data, route.start, route.end, params, variant)
        for route in result.routes
    )


@pytest.mark.parametrize("rate", RATES)
def test_soft_tw_tight_capacity_matches_bellman(rate):
    params = PenaltyParams(alpha=rate, beta=rate)
    for seed in range(60):
        data = grid_data(30 + seed, seed, base_q=TIGHT_Q)
        result = linear_soft_vrptw(data, params)
        reference = bellman_soft_vrptw(data, params)
        assert all(same_cost(got, want) for got, want in zip(result.pot, reference.pot)), seed
        assert same_cost(_reevaluated(data, result, params, Variant.SOFT_TW), result.total_cost)


@pytest.mark.parametrize("seed", range(4))
def test_soft_tw_tight_capacity_audit(seed):
    data = grid_data(60, seed, base_q=TIGHT_Q)
    auditor = StateAuditor(data, PenaltyParams(alpha=1.0, beta=1.0))
    linear_soft_vrptw(data, auditor.params, auditor)
    assert auditor.violations == []


@pytest.mark.slow
@pytest.mark.parametrize("rate", RATES)
def test_soft_tw_tight_capacity_matches_oracle(rate):
    params = PenaltyParams(alpha=rate, beta=rate)
    for seed in range(150):
        data = grid_data(30 + seed % 61, seed, base_q=TIGHT_Q)
        result = linear_soft_vrptw(data, params)
        oracle = oracle_split(data, Variant.SOFT_TW, params)
        assert same_cost(result.total_cost, oracle.total_cost), seed
        assert same_cost(_reevaluated(data, result, params, Variant.SOFT_TW), oracle.total_cost)


@pytest.mark.parametrize("variant", [Variant.SOFT_SPD, Variant.SOFT_TW])
@pytest.mark.parametrize("seed", range(4))
def test_unrounded_distances_match_oracle(variant, seed):
    data = generated_data(34, seed, q_mult=2, b_mult=2)
    result = _run(data, variant)
    oracle = oracle_split(data, variant, PARAMS)
    for got, expected in zip(result.pot, oracle.pot):
        assert same_cost(got, expected)


@pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (1.0, 0.5), (1000.0, 1000.0)])
def test_soft_penalty_range(alpha, beta):
    params = PenaltyParams(alpha=alpha, beta=beta)
    for seed in range(3):
        data = grid_data(21, seed)
        for variant in (Variant.SOFT_SPD, Variant.SOFT_TW):
            assert _run(data, variant, params).pot == oracle_split(data, variant, params).pot


# ── Work bound ──────────────────────────────────────────────────────────

@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("q_mult,b_mult", [(1, 1), (1000, 10000)])
def test_deque_work_is_linear(variant, q_mult, b_mult):
    for n in (1, 13, 89, 300):
        data = _data(variant, n, seed=n, q_mult=q_mult, b_mult=b_mult)
        counters = _run(data, variant).counters
        assert counters.total <= counter_bound(variant, n)
        assert counters.cursor_retreats <= counters.pops


def test_cursor_retreats_beyond_pops_break_the_bound(example_data):
    result = linear_cvrp(example_data)
    skewed = replace(
        result, counters=replace(result.counters, cursor_retreats=result.counters.pops + 1)
    )
    with pytest.raises(CorrectnessMismatchException):
        check_counter_bound(skewed, Variant.CVRP)


# ── Relaxations ─────────────────────────────────────────────────────────

def _assert_collapses_to_cvrp(seed):
    data = grid_data(34, seed).without_time_windows().without_pickups()
    expected = linear_cvrp(data).pot
    assert linear_vrpspdtw(data).pot == expected
    assert generalized_split(data, capacity_arc(data)).pot == expected
    assert bellman_cvrp(data).pot == expected

    uncapacitated = replace(data, q=math.inf)
    free = linear_cvrp(uncapacitated).pot
    assert linear_soft_vrpspd(data, PenaltyParams()).pot == free
    assert linear_soft_vrptw(data, PenaltyParams()).pot == free


def _assert_huge_penalties_act_hard(seed):
    data = grid_data(34, seed)
    max_arc = max(max(data.c_out), max(data.c_in), max(data.c_link))
    huge = PenaltyParams(alpha=1e9 * max_arc, beta=1e9 * max_arc)

    spd = data.without_time_windows()
    assert linear_soft_vrpspd(spd, huge).total_cost == linear_vrpspdtw(spd).total_cost

    tw = data.without_pickups()
    assert linear_soft_vrptw(tw, huge).total_cost == linear_vrpspdtw(tw).total_cost


@pytest.mark.parametrize("seed", range(5))
def test_degenerate_data_collapses_to_cvrp(seed):
    _assert_collapses_to_cvrp(seed)


@pytest.mark.slow
def test_degenerate_data_collapses_to_cvrp_many_seeds():
    for seed in range(100):
        _assert_collapses_to_cvrp(seed)


@pytest.mark.parametrize("seed", range(5))
def test_huge_penalties_match_hard_constraints(seed):
    _assert_huge_penalties_act_hard(seed)


@pytest.mark.slow
def test_huge_penalties_match_hard_constraints_many_seeds():
    for seed in range(50):
        _assert_huge_penalties_act_hard(seed)


# ── Errors ──────────────────────────────────────────────────────────────

def test_infeasible_singleton_raises():
    data = chain_data((1, 1), (1, 1), (1,), (3, 30), q=10)
    for split in (linear_cvrp, linear_vrpspdtw):
        with pytest.raises(NoFeasibleSplitException) as exc:
            split(data)
        assert exc.value.details["position"] == 2


def test_soft_tw_rejects_late_singleton():
    data = chain_data((5,), (1,), (), (0,), b=(4,), horizon=100)
    with pytest.raises(InvalidInstanceException):
        linear_soft_vrptw(data, PARAMS)


def test_soft_tw_rejects_oversized_singleton():
    data = chain_data((1,), (1,), (), (10,), q=5)
    with pytest.raises(InvalidInstanceException):
        linear_soft_vrptw(data, PARAMS)


# ── Audit ───────────────────────────────────────────────────────────────

def _assert_audit_clean(variant, seed):
    data = _data(variant, 34, seed, q_mult=2, b_mult=5)
    auditor = StateAuditor(data, PARAMS)
    _run(data, variant, auditor=auditor)
    assert auditor.checks > 0
    assert auditor.violations == [], seed


@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("seed", range(3))
def test_audited_runs_are_clean(variant, seed):
    _assert_audit_clean(variant, seed)


@pytest.mark.slow
@pytest.mark.parametrize("variant", list(Variant))
def test_audited_runs_are_clean_many_seeds(variant):
    for seed in range(50):
        _assert_audit_clean(variant, seed)


@pytest.mark.parametrize("variant", [Variant.CVRP, Variant.HARD_SPDTW])
def test_audit_flags_inadmissible_route(example_data, variant):
    # the whole worked example exceeds Q in one route
    auditor = StateAuditor(example_data)
    auditor.check_arc(variant, 0, 10, evaluator.route_cost(example_data, 0, 10))
    assert [v.kind for v in auditor.violations] == ["inadmissible"]


def test_generalized_with_evaluator_arcs_matches_linear():
    for seed in range(3):
        data = grid_data(34, seed, q_mult=2, b_mult=5)
        auditor = StateAuditor(data)
        result = generalized_split(
            data, evaluator_arc(data, Variant.HARD_SPDTW), Variant.HARD_SPDTW, auditor
        )
        assert result.total_cost == linear_vrpspdtw(data).total_cost
        assert auditor.ok


def test_service_audit_and_check():
    data = grid_data(21, 3)
    outcome = SplitService().run(
        data, Variant.SOFT_TW, Algorithm.LINEAR, PARAMS, check=True, audit=True
    )
    assert outcome.agrees
    assert outcome.auditor is not None and outcome.auditor.ok
    assert [line.customers for line in outcome.route_lines()] != []
