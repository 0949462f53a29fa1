"""
Oracle tests: cap, trivial sizes, and agreement with full enumeration of
contiguous partitions.
"""
import pytest

from tour_split.core.exceptions import OracleCapException, UsageException
from tour_split.models import PenaltyParams, Variant
from tour_split.splits.evaluator import route_cost
from tour_split.splits.oracle import (
    EXHAUSTIVE_LIMIT,
    exhaustive_split,
    oracle_route_scan,
    oracle_split,
)
from tests.conftest import EXAMPLE_POT, EXAMPLE_PRED
from tests.helpers import chain_data, generated_data, grid_data


def test_worked_example(example_data):
    result = oracle_split(example_data, Variant.CVRP)
    assert result.pot == tuple(float(v) for v in EXAMPLE_POT)
    assert result.pred == EXAMPLE_PRED
    assert result.algorithm == "oracle"


def test_exhaustive_worked_example(example_data):
    cost, cuts = exhaustive_split(example_data)
    assert cost == 88.0
    assert cuts[-1] == 10


def test_cap_is_enforced():
    data = generated_data(12, 1, extend=False)
    with pytest.raises(OracleCapException) as exc:
        oracle_split(data, Variant.CVRP, cap=11)
    assert exc.value.exit_code == 1


def test_default_cap_is_300():
    data = generated_data(301, 1, extend=False)
    with pytest.raises(OracleCapException):
        oracle_split(data, Variant.CVRP)


def test_exhaustive_limit():
    data = generated_data(EXHAUSTIVE_LIMIT + 1, 0, extend=False)
    with pytest.raises(UsageException):
        exhaustive_split(data)


@pytest.mark.parametrize("variant", list(Variant))
def test_single_customer(variant):
    data = grid_data(1, 5)
    result = oracle_split(data, variant, PenaltyParams(alpha=1.0, beta=1.0))
    assert result.total_cost == route_cost(data, 0, 1)
    assert result.pred == (0, 0)


def test_empty_tour():
    data = chain_data((), (), (), ())
    assert oracle_split(data, Variant.SOFT_TW).total_cost == 0.0
    assert exhaustive_split(data) == (0.0, [])


def test_route_scan():
    data = chain_data((1, 1), (1, 1), (1,), (6, 6), q=10)
    assert oracle_route_scan(data, 0, 2, Variant.CVRP) == (False, 3.0)
    assert oracle_route_scan(data, 0, 2, Variant.SOFT_SPD, PenaltyParams(alpha=2.0)) == (True, 7.0)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [2, 5, 9, 12])
def test_matches_exhaustive(n, seed):
    data = generated_data(n, seed, extend=False, base_q=60)
    cost, cuts = exhaustive_split(data)
    result = oracle_split(data, Variant.CVRP)
    assert result.total_cost == cost
    assert cuts[-1] == n


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, EXHAUSTIVE_LIMIT + 1))
def test_matches_exhaustive_many_seeds(n):
    for seed in range(50):
        data = generated_data(n, seed, extend=False, base_q=60)
        assert oracle_split(data, Variant.CVRP).total_cost == exhaustive_split(data)[0]


@pytest.mark.parametrize("variant", [Variant.SOFT_SPD, Variant.SOFT_TW])
@pytest.mark.parametrize("seed", range(5))
def test_soft_optimum_bounded_by_single_route(variant, seed):
    data = grid_data(21, seed)
    params = PenaltyParams(alpha=10.0, beta=10.0)
    result = oracle_split(data, variant, params)
    assert result.total_cost <= oracle_route_scan(data, 0, data.n, variant, params)[1]
    assert result.total_cost <= sum(route_cost(data, i - 1, i) for i in range(1, data.n + 1))
