"""
Tour projection: relabel customers by tour position and precompute the
prefix sums every Split works from.

Position 0 is the depot. For position i >= 1:

    C[i] = C[i-1] + c_{i-1,i}          (c_{0,1} for i = 1)
    D[i] = D[i-1] + d_i
    P[i] = P[i-1] + p_i
    S[i] = S[i-1] + s_{i-1} + t_{i-1,i}
    W[i] = warp accumulated by driving the whole tour without depot returns
"""
import math
from dataclasses import dataclass, replace
from typing import Tuple

import numpy as np

from tour_split.models.instance import Instance, Tour

Vector = Tuple[float, ...]


@dataclass(frozen=True, slots=True)
class TourData:
    """Tour-projected instance. Every array has n+1 entries, index 0 = depot."""

    n: int
    q: float
    horizon: float
    labels: Tuple[int, ...]     # original customer label at each position
    c_out: Vector               # c_{0,i}
    c_in: Vector                # c_{i,0}
    c_link: Vector              # c_{i-1,i}
    t_out: Vector
    t_in: Vector
    t_link: Vector
    a: Vector
    b: Vector
    s: Vector
    d: Vector
    p: Vector
    latest: Vector              # min(b_i, T - s_i - t_{i,0}), the strengthened deadline
    C: Vector
    D: Vector
    P: Vector
    S: Vector
    W: Vector

    def without_time_windows(self) -> "TourData":
        """Same tour with every window and the horizon opened to infinity."""
        zeros = (0.0,) * (self.n + 1)
        inf = (math.inf,) * (self.n + 1)
        return replace(self, horizon=math.inf, a=zeros, b=inf, latest=inf, W=zeros)

    def without_pickups(self) -> "TourData":
        """Same tour with all pickups dropped (delivery-only load profile)."""
        zeros = (0.0,) * (self.n + 1)
        return replace(self, p=zeros, P=zeros)


def _prefix(values: np.ndarray) -> Vector:
    return tuple(np.cumsum(values, dtype=float).tolist())


def project_tour(instance: Instance, tour: Tour) -> TourData:
    """
    Relabel the instance along the tour and build every prefix array.

    Raises:
        InvalidTourException: tour is not a permutation of 1..n
    """
    n = instance.n
    tour.validate(n)

    labels = np.asarray((0, *tour.order), dtype=np.int64)
    nodes = labels[1:]
    depot = np.zeros(n, dtype=np.int64)
    idx = nodes - 1

    def with_depot(values: np.ndarray, depot_value: float = 0.0) -> np.ndarray:
        return np.concatenate(([depot_value], np.asarray(values, dtype=float)))

    c_out = with_depot(instance.arc_costs(depot, nodes))
    c_in = with_depot(instance.arc_costs(nodes, depot))
    c_link = with_depot(instance.arc_costs(labels[:-1], nodes))
    t_out = with_depot(instance.arc_times(depot, nodes))
    t_in = with_depot(instance.arc_times(nodes, depot))
    t_link = with_depot(instance.arc_times(labels[:-1], nodes))

    demands = np.asarray(instance.demands, dtype=float)
    pickups = np.asarray(instance.pickups, dtype=float)
    opens = np.asarray(instance.opens, dtype=float)
    closes = np.asarray(instance.closes, dtype=float)
    service = np.asarray(instance.service, dtype=float)

    d = with_depot(demands[idx])
    p = with_depot(pickups[idx])
    a = with_depot(opens[idx])
    b = with_depot(closes[idx], instance.horizon)
    s = with_depot(service[idx])
    latest = np.minimum(b, instance.horizon - s - t_in)
    latest[0] = instance.horizon

    # S[i] - S[i-1] = s_{i-1} + t_{i-1,i}
    s_prev = np.concatenate(([0.0], s[:-1]))

    data = TourData(
        n=n,
        q=float(instance.q),
        horizon=float(instance.horizon),
        labels=tuple(labels.tolist()),
        c_out=tuple(c_out.tolist()),
        c_in=tuple(c_in.tolist()),
        c_link=tuple(c_link.tolist()),
        t_out=tuple(t_out.tolist()),
        t_in=tuple(t_in.tolist()),
        t_link=tuple(t_link.tolist()),
        a=tuple(a.tolist()),
        b=tuple(b.tolist()),
        s=tuple(s.tolist()),
        d=tuple(d.tolist()),
        p=tuple(p.tolist()),
        latest=tuple(latest.tolist()),
        C=_prefix(c_link),
        D=_prefix(d),
        P=_prefix(p),
        S=_prefix(s_prev + t_link),
        W=(),
    )
    return replace(data, W=compute_warp_prefix(data))


def compute_warp_prefix(data: TourData) -> Vector:
    """
    Cumulative time warp W[0..n] of the undivided tour P(0, n).

    Service start advances by max(previous + s_{i-1} + t_{i-1,i}, a_i); any
    excess over the strengthened deadline is added to W and the clock is
    clamped back to the deadline.
    """
    W = [0.0] * (data.n + 1)
    duration = 0.0
    for i in range(1, data.n + 1):
        duration = max(duration + data.s[i - 1] + data.t_link[i], data.a[i])
        limit = data.latest[i]
        if duration > limit:
            W[i] = W[i - 1] + duration - limit
            duration = limit
        else:
            W[i] = W[i - 1]
    return tuple(W)
