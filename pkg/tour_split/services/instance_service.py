"""
Instance service - deterministic benchmark instances and their validation.

Pipeline for one benchmark instance:
1. generate_base: Euclidean points, integer demands, random giant tour
2. extend_to_spdtw: split demands into deliveries and pickups, constant
   service time, horizon from a timed prefix of the tour, random windows
3. apply_multipliers: widen capacity, closing windows and horizon per grid cell
4. verify: metric travel times and feasible singletons before any Split runs

Randomness comes from numpy's PCG64 bit generator seeded with the caller's
seed; each stage draws from its own child stream, so adding a draw to one
stage never shifts another.
"""
import math
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np

from tour_split.core.config import settings
from tour_split.core.exceptions import InvalidConfigException, UsageException
from tour_split.core.logging import get_logger
from tour_split.models.instance import Instance, Tour
from tour_split.models.tour_data import project_tour

logger = get_logger(__name__)

PRNG_NAME = "PCG64"

TRIANGLE_SCOPES = ("tour", "depot", "full")

# Stream ids for SeedSequence spawn keys
_BASE_STREAM = 0
_EXTEND_STREAM = 1

# Ten-customer example with hand-checkable optimum (identity tour)
EXAMPLE_OUT = (4, 5, 10, 9, 14, 12, 16, 11, 5, 3)
EXAMPLE_IN = (6, 3, 8, 11, 10, 12, 14, 14, 6, 7)
EXAMPLE_LINKS = (4, 3, 7, 2, 7, 3, 8, 6, 8, 4)   # first entry is c_{0,1}
EXAMPLE_DEMANDS = (11, 3, 6, 5, 7, 8, 1, 7, 3, 7)
EXAMPLE_Q = 25


@dataclass(frozen=True)
class TriangleViolation:
    i: int
    j: int
    k: int
    lhs: float          # t_ij + t_jk
    rhs: float          # t_ik


@dataclass(frozen=True)
class SingletonIssue:
    customer: int
    reason: str         # capacity | window
    detail: str


@dataclass
class ValidationReport:
    scope: str
    checked: int = 0
    violations: List[TriangleViolation] = field(default_factory=list)
    singleton_issues: List[SingletonIssue] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations and not self.singleton_issues


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream,))))


def _floats(values) -> Tuple[float, ...]:
    return tuple(float(v) for v in values)


class InstanceService:
    """Generates, scales and validates instances."""

    def __init__(self):
        self.settings = settings

    # ── Generation ──────────────────────────────────────────────────

    def generate_base(
        self,
        n: int,
        seed: int,
        coord_range: Optional[Tuple[float, float]] = None,
        demand_range: Optional[Tuple[int, int]] = None,
        q: Optional[float] = None,
    ) -> Tuple[Instance, Tour]:
        """
        Uniform Euclidean CVRP instance and a random giant tour.

        Costs and travel times are the same rounded Euclidean distances; no
        windows, no pickups, no service time.
        """
        if n < 0:
            raise InvalidConfigException(f"n must be nonnegative, got {n}")
        lo, hi = coord_range or (self.settings.gen_coord_min, self.settings.gen_coord_max)
        d_lo, d_hi = demand_range or (self.settings.gen_demand_min, self.settings.gen_demand_max)
        if lo > hi or d_lo > d_hi or d_lo < 0:
            raise InvalidConfigException(
                "Inverted or negative generator range",
                details={"coord_range": (lo, hi), "demand_range": (d_lo, d_hi)},
            )
        q = float(self.settings.bench_base_q if q is None else q)

        rng = _rng(seed, _BASE_STREAM)
        points = rng.uniform(lo, hi, size=(n + 1, 2))
        demands = rng.integers(d_lo, d_hi, size=n, endpoint=True)
        order = rng.permutation(n) + 1

        zeros = (0.0,) * n
        instance = Instance(
            q=q,
            horizon=math.inf,
            demands=_floats(demands),
            pickups=zeros,
            opens=zeros,
            closes=(math.inf,) * n,
            service=zeros,
            coords=tuple((float(x), float(y)) for x, y in points),
            rounding=True,
            meta={
                "seed": seed,
                "generator_params": {
                    "stage": "base",
                    "prng": PRNG_NAME,
                    "numpy": np.__version__,
                    "coord_range": [lo, hi],
                    "demand_range": [d_lo, d_hi],
                },
            },
        )
        logger.info("instance_generated", n=n, seed=seed, q=q)
        return instance, Tour(tuple(int(v) for v in order))

    def extend_to_spdtw(
        self,
        instance: Instance,
        tour: Tour,
        seed: int,
        service_time: Optional[float] = None,
    ) -> Instance:
        """
        Turn a CVRP base into a pickup-and-delivery instance with windows.

        Each demand d is split as d' = round(u d), p = d - d' with u uniform
        in [0, 1]. The horizon is the time to serve the first tour customers
        (settings.gen_tour_prefix) and return, raised until every singleton
        route fits. Opening times are uniform in [0, T - s - t_in - t_out];
        closing times add a width uniform in [min_frac T, max_frac T] and are
        never earlier than the direct arrival from the depot.
        """
        tour.validate(instance.n)
        n = instance.n
        s = float(self.settings.gen_service_time if service_time is None else service_time)
        if s < 0:
            raise InvalidConfigException(f"service_time must be nonnegative, got {s}")

        rounding = instance.rounding
        if rounding and not self.validate_triangle(instance, "depot").clean:
            # rounded distances broke metricity; fall back to exact distances
            rounding = False
            logger.warning("triangle_violations_found", action="unrounded_distances", n=n)
        base = replace(instance, rounding=rounding)

        rng = _rng(seed, _EXTEND_STREAM)
        d = np.asarray(base.demands, dtype=float)
        u = rng.uniform(0.0, 1.0, size=n)
        delivery = np.rint(u * d)
        pickup = d - delivery

        nodes = np.arange(1, n + 1)
        depot = np.zeros(n, dtype=np.int64)
        t_out = base.arc_times(depot, nodes) if n else np.zeros(0)
        t_in = base.arc_times(nodes, depot) if n else np.zeros(0)

        horizon = self._timed_horizon(base, tour, s)
        if n:
            horizon = max(horizon, float(np.max(t_out + s + t_in)))
        if not rounding:
            # unit margin so T - s - t_in >= t_out survives float subtraction
            horizon = math.ceil(horizon) + 1.0

        slack = np.maximum(0.0, horizon - s - t_in - t_out)
        opens = rng.uniform(0.0, 1.0, size=n) * slack
        widths = rng.uniform(
            self.settings.gen_window_min_frac, self.settings.gen_window_max_frac, size=n
        ) * horizon
        if rounding:
            opens = np.floor(opens)
            widths = np.ceil(widths)
        closes = np.maximum(opens + widths, t_out)

        meta = dict(instance.meta)
        params = dict(meta.get("generator_params", {}))
        params.update(
            {
                "stage": "spdtw",
                "extend_seed": seed,
                "service_time": s,
                "tour_prefix": self.settings.gen_tour_prefix,
                "demand_split": "u~U[0,1], d'=round(u*d), p=d-d'",
                "windows": "a~U[0,max(0,T-s-t_in-t_out)], b=max(a+U[min_frac,max_frac]*T, t_out)",
                "window_fracs": [
                    self.settings.gen_window_min_frac,
                    self.settings.gen_window_max_frac,
                ],
                "rounding": rounding,
            }
        )
        meta["generator_params"] = params

        extended = replace(
            base,
            horizon=float(horizon),
            demands=_floats(delivery),
            pickups=_floats(pickup),
            opens=_floats(opens),
            closes=_floats(closes),
            service=(s,) * n,
            meta=meta,
        )
        logger.info("instance_extended", n=n, seed=seed, horizon=horizon, rounding=rounding)
        return extended

    def _timed_horizon(self, instance: Instance, tour: Tour, service_time: float) -> float:
        """Depot, first tour customers with service, back to the depot."""
        prefix = tour.order[: self.settings.gen_tour_prefix]
        if not prefix:
            return 0.0
        stops = np.asarray((0, *prefix, 0), dtype=np.int64)
        travel = float(np.sum(instance.arc_times(stops[:-1], stops[1:])))
        return travel + service_time * len(prefix)

    def apply_multipliers(self, instance: Instance, q_mult: float, b_mult: float) -> Instance:
        """
        Scale Q by q_mult and every closing time plus T by b_mult.

        Raises:
            InvalidConfigException: a multiplier below 1 (it could break
                singleton feasibility)
        """
        for name, value in (("q_mult", q_mult), ("b_mult", b_mult)):
            if math.isnan(value) or value < 1:
                raise InvalidConfigException(
                    f"'{name}' must be at least 1, got {value}", details={name: value}
                )
        meta = dict(instance.meta)
        meta["multipliers"] = {"q_mult": q_mult, "b_mult": b_mult}
        return replace(
            instance,
            q=instance.q * q_mult,
            horizon=instance.horizon * b_mult,
            closes=tuple(b * b_mult for b in instance.closes),
            meta=meta,
        )

    def worked_example(self) -> Tuple[Instance, Tour]:
        """
        Ten customers served in label order with Q = 25; the optimal CVRP
        split costs 88 with routes (0,4], (4,8], (8,10].

        Arcs not given by the example go through the depot (c_i0 + c_0j).
        """
        n = len(EXAMPLE_DEMANDS)
        out = (0,) + EXAMPLE_OUT
        back = (0,) + EXAMPLE_IN
        matrix = [[0.0] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1):
                if i == j:
                    continue
                if i == 0:
                    matrix[i][j] = float(out[j])
                elif j == 0:
                    matrix[i][j] = float(back[i])
                elif j == i + 1:
                    matrix[i][j] = float(EXAMPLE_LINKS[j - 1])
                else:
                    matrix[i][j] = float(back[i] + out[j])
        cost = tuple(tuple(row) for row in matrix)
        zeros = (0.0,) * n
        instance = Instance(
            q=float(EXAMPLE_Q),
            horizon=math.inf,
            demands=_floats(EXAMPLE_DEMANDS),
            pickups=zeros,
            opens=zeros,
            closes=(math.inf,) * n,
            service=zeros,
            cost_matrix=cost,
            time_matrix=cost,
            meta={"generator_params": {"stage": "worked_example"}},
        )
        return instance, Tour.identity(n)

    # ── Validation ──────────────────────────────────────────────────

    def _time_matrix(self, instance: Instance) -> np.ndarray:
        nodes = np.arange(instance.n + 1)
        frm, to = np.meshgrid(nodes, nodes, indexing="ij")
        return instance.arc_times(frm.ravel(), to.ravel()).reshape(frm.shape)

    def validate_triangle(
        self,
        instance: Instance,
        scope: str = "depot",
        tour: Optional[Tour] = None,
        limit: int = 100,
    ) -> ValidationReport:
        """
        Check t_ij + t_jk >= t_ik.

        Scopes:
          tour   the depot triples between consecutive tour customers, O(n)
          depot  every triple with the depot in any slot, O(n^2)
          full   every triple, O(n^3)

        At most `limit` violations are kept; `checked` counts all triples.
        """
        if scope not in TRIANGLE_SCOPES:
            raise UsageException(f"Unknown triangle scope '{scope}'")
        report = ValidationReport(scope=scope)
        tol = self.settings.triangle_tolerance

        def collect(lhs: np.ndarray, rhs: np.ndarray, index) -> None:
            report.checked += int(lhs.size)
            bad = np.argwhere(lhs < rhs - tol * (1.0 + np.abs(rhs)))
            for pos in bad[: max(0, limit - len(report.violations))]:
                i, j, k = index(tuple(int(v) for v in pos))
                report.violations.append(
                    TriangleViolation(i, j, k, float(lhs[tuple(pos)]), float(rhs[tuple(pos)]))
                )

        if scope == "tour":
            if tour is None:
                raise UsageException("Triangle scope 'tour' needs a tour")
            data = project_tour(instance, tour)
            labels = data.labels
            t_out = np.asarray(data.t_out[1:])
            t_in = np.asarray(data.t_in[1:])
            link = np.asarray(data.t_link[2:])
            prev_out, next_out = t_out[:-1], t_out[1:]
            prev_in, next_in = t_in[:-1], t_in[1:]
            pair = lambda p: (labels[p[0] + 1], labels[p[0] + 2])
            collect(prev_out + link, next_out, lambda p: (0, *pair(p)))
            collect(link + next_in, prev_in, lambda p: (*pair(p), 0))
            collect(prev_in + next_out, link, lambda p: (pair(p)[0], 0, pair(p)[1]))
        else:
            t = self._time_matrix(instance)
            out, back = t[0, :], t[:, 0]
            collect(out[:, None] + t, np.broadcast_to(out[None, :], t.shape), lambda p: (0, p[0], p[1]))
            collect(t + back[None, :], np.broadcast_to(back[:, None], t.shape), lambda p: (p[0], p[1], 0))
            collect(back[:, None] + out[None, :], t, lambda p: (p[0], 0, p[1]))
            if scope == "full":
                for j in range(instance.n + 1):
                    collect(t[:, j][:, None] + t[j, :][None, :], t, lambda p, j=j: (p[0], j, p[1]))

        if report.violations:
            first = report.violations[0]
            logger.warning(
                "triangle_violations_found",
                scope=scope,
                count=len(report.violations),
                first=(first.i, first.j, first.k),
            )
        return report

    def check_singletons(self, instance: Instance) -> List[SingletonIssue]:
        """Customers whose own route breaks capacity or its time window."""
        issues: List[SingletonIssue] = []
        n = instance.n
        if n == 0:
            return issues
        nodes = np.arange(1, n + 1)
        depot = np.zeros(n, dtype=np.int64)
        t_out = instance.arc_times(depot, nodes)
        t_in = instance.arc_times(nodes, depot)
        for k in range(n):
            load = max(instance.demands[k], instance.pickups[k])
            if load > instance.q:
                issues.append(
                    SingletonIssue(k + 1, "capacity", f"load {load} exceeds Q={instance.q}")
                )
            start = max(float(t_out[k]), instance.opens[k])
            latest = min(instance.closes[k], instance.horizon - instance.service[k] - float(t_in[k]))
            if start > latest:
                issues.append(
                    SingletonIssue(k + 1, "window", f"service starts at {start}, deadline {latest}")
                )
        return issues

    def verify(
        self, instance: Instance, full: bool = False, tour: Optional[Tour] = None
    ) -> ValidationReport:
        """Triangle check (depot or full scope) plus singleton feasibility."""
        report = self.validate_triangle(instance, "full" if full else "depot", tour)
        report.singleton_issues = self.check_singletons(instance)
        logger.info(
            "instance_verified",
            scope=report.scope,
            checked=report.checked,
            violations=len(report.violations),
            singleton_issues=len(report.singleton_issues),
        )
        return report
