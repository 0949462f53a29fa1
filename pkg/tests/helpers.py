"""
Instance factories shared by the test modules.
"""
import math
from dataclasses import replace
from typing import Optional, Sequence, Tuple

import numpy as np
import pytest

from tour_split.models.instance import Instance, Tour
from tour_split.models.tour_data import TourData, project_tour
from tour_split.services.instance_service import InstanceService


def _matrix(out: Sequence[float], back: Sequence[float], links: Sequence[float]):
    """Depot row/column from out/back, tour arcs i-1 -> i from links, the rest through the depot."""
    n = len(out)
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == j:
                row.append(0.0)
            elif i == 0:
                row.append(float(out[j - 1]))
            elif j == 0:
                row.append(float(back[i - 1]))
            elif j == i + 1:
                row.append(float(links[j - 2]))
            else:
                row.append(float(back[i - 1] + out[j - 1]))
        rows.append(tuple(row))
    return tuple(rows)


def chain_instance(
    c_out: Sequence[float],
    c_in: Sequence[float],
    links: Sequence[float],
    d: Sequence[float],
    *,
    p: Optional[Sequence[float]] = None,
    a: Optional[Sequence[float]] = None,
    b: Optional[Sequence[float]] = None,
    s: Optional[Sequence[float]] = None,
    t_out: Optional[Sequence[float]] = None,
    t_in: Optional[Sequence[float]] = None,
    t_links: Optional[Sequence[float]] = None,
    q: float = math.inf,
    horizon: float = math.inf,
) -> Tuple[Instance, Tour]:
    """
    Explicit-matrix instance visited in label order. `links[k]` is the arc
    from customer k+1 to customer k+2; times default to costs.
    """
    n = len(d)
    zeros = (0.0,) * n
    cost = _matrix(c_out, c_in, links)
    time = _matrix(t_out or c_out, t_in or c_in, t_links or links)
    instance = Instance(
        q=q,
        horizon=horizon,
        demands=tuple(float(v) for v in d),
        pickups=tuple(float(v) for v in p) if p else zeros,
        opens=tuple(float(v) for v in a) if a else zeros,
        closes=tuple(float(v) for v in b) if b else (math.inf,) * n,
        service=tuple(float(v) for v in s) if s else zeros,
        cost_matrix=cost,
        time_matrix=time,
    )
    return instance, Tour.identity(n)


def chain_data(*args, **kwargs) -> TourData:
    return project_tour(*chain_instance(*args, **kwargs))


def generated(
    n: int,
    seed: int,
    *,
    q_mult: float = 1,
    b_mult: float = 1,
    base_q: float = 100,
    extend: bool = True,
) -> Tuple[Instance, Tour]:
    service = InstanceService()
    instance, tour = service.generate_base(n, seed, q=base_q)
    if extend:
        instance = service.extend_to_spdtw(instance, tour, seed)
    return service.apply_multipliers(instance, q_mult, b_mult), tour


def generated_data(n: int, seed: int, **kwargs) -> TourData:
    return project_tour(*generated(n, seed, **kwargs))


def grid(
    n: int, seed: int, *, q_mult: float = 1, b_mult: float = 1, base_q: float = 100
) -> Tuple[Instance, Tour]:
    """
    Generated instance on Manhattan distances between rounded points. The
    matrix is integral and metric, so windows, warps and costs stay exact.
    """
    service = InstanceService()
    base, tour = service.generate_base(n, seed, q=base_q)
    xy = np.rint(np.asarray(base.coords, dtype=float))
    matrix = np.abs(xy[:, None, :] - xy[None, :, :]).sum(axis=2)
    rows = tuple(tuple(float(v) for v in row) for row in matrix)
    base = replace(base, coords=None, cost_matrix=rows, time_matrix=rows)
    instance = service.extend_to_spdtw(base, tour, seed)
    return service.apply_multipliers(instance, q_mult, b_mult), tour


def grid_data(n: int, seed: int, **kwargs) -> TourData:
    return project_tour(*grid(n, seed, **kwargs))


def same_cost(value: float, expected: float):
    """Exact on integer data, relative 1e-9 otherwise."""
    return value == pytest.approx(expected, rel=1e-9, abs=1e-9)
