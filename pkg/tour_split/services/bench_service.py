"""
Bench service - timed Bellman vs linear comparison over the instance grid.

For every seed and size a base instance is generated and extended once;
every (Q, b_mult) cell rescales it. Within a cell each variant is timed for
both algorithms: warmup runs, then `reps` timed runs. A timing row is only
kept once both algorithms returned the same pot[n] and the linear run stayed
within its deque-operation bound.

Cells are independent and may run in a process pool (--parallel); timings
are then noisier since workers share cores and caches.
"""
import itertools
import math
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from tour_split.core.exceptions import CorrectnessMismatchException, InsufficientDataException
from tour_split.core.logging import get_logger
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.instance import Instance, Tour
from tour_split.models.params import PenaltyParams
from tour_split.models.result import SplitResult
from tour_split.models.tour_data import TourData, project_tour
from tour_split.schemas.bench import BenchConfig, BenchRow, SpeedupRow
from tour_split.services.instance_service import InstanceService
from tour_split.services.split_service import check_counter_bound, costs_agree
from tour_split.splits.registry import get_split

logger = get_logger(__name__)

MIN_SCALING_SIZES = 4

ScalingKey = Tuple[str, str, float, float, float, float]


@dataclass(frozen=True)
class CellTask:
    """Everything one worker needs to time one grid cell."""

    name: str
    instance: Instance
    tour: Tour
    q_mult: float
    b_mult: float
    variants: Tuple[str, ...]
    alphas: Tuple[float, ...]
    betas: Tuple[float, ...]
    warmups: int
    reps: int


@dataclass
class BenchReport:
    rows: List[BenchRow] = field(default_factory=list)

    def speedups(self) -> List[SpeedupRow]:
        return speedup_series(self.rows)


def penalty_grid(variant: Variant, alphas: Sequence[float], betas: Sequence[float]) -> List[PenaltyParams]:
    if variant is Variant.SOFT_SPD:
        return [PenaltyParams(alpha=alpha) for alpha in alphas]
    if variant is Variant.SOFT_TW:
        return [PenaltyParams(alpha, beta) for alpha, beta in itertools.product(alphas, betas)]
    return [PenaltyParams()]


def time_split(
    data: TourData,
    variant: Variant,
    algorithm: Algorithm,
    params: PenaltyParams,
    warmups: int,
    reps: int,
) -> Tuple[SplitResult, np.ndarray]:
    """Run warmups, then `reps` timed runs; returns the last result and times in ms."""
    split = get_split(variant, algorithm)
    result = None
    for _ in range(warmups):
        result = split(data, params, None)
    samples = np.empty(reps, dtype=float)
    for rep in range(reps):
        started = time.perf_counter_ns()
        result = split(data, params, None)
        samples[rep] = (time.perf_counter_ns() - started) / 1e6
    return result, samples


def _row(
    task: CellTask,
    data: TourData,
    variant: Variant,
    algorithm: Algorithm,
    params: PenaltyParams,
    result: SplitResult,
    samples: np.ndarray,
) -> BenchRow:
    return BenchRow(
        instance=task.name,
        n=data.n,
        variant=variant.value,
        algorithm=algorithm.value,
        q_mult=task.q_mult,
        b_mult=task.b_mult,
        alpha=params.alpha,
        beta=params.beta,
        reps=len(samples),
        mean_ms=float(np.mean(samples)),
        median_ms=float(np.median(samples)),
        stddev_ms=float(np.std(samples, ddof=1)) if len(samples) > 1 else 0.0,
        cost=result.total_cost,
        pushes=result.counters.pushes,
        pops=result.counters.pops,
        cursor_moves=result.counters.cursor_moves,
        min_ms=float(np.min(samples)),
        routes=len(result.routes),
    )


def time_cell(task: CellTask) -> List[BenchRow]:
    """
    Time every variant and penalty setting of one cell.

    Raises:
        CorrectnessMismatchException: Bellman and linear disagree on pot[n],
            or the linear run broke its operation bound
    """
    data = project_tour(task.instance, task.tour)
    rows: List[BenchRow] = []
    for name in task.variants:
        variant = Variant(name)
        for params in penalty_grid(variant, task.alphas, task.betas):
            bellman, bellman_ms = time_split(
                data, variant, Algorithm.BELLMAN, params, task.warmups, task.reps
            )
            linear, linear_ms = time_split(
                data, variant, Algorithm.LINEAR, params, task.warmups, task.reps
            )
            if not costs_agree(bellman.total_cost, linear.total_cost):
                logger.error(
                    "bench_cost_mismatch",
                    instance=task.name,
                    variant=variant.value,
                    q_mult=task.q_mult,
                    b_mult=task.b_mult,
                    bellman_cost=bellman.total_cost,
                    linear_cost=linear.total_cost,
                )
                raise CorrectnessMismatchException(
                    f"{task.name} {variant.value}: bellman {bellman.total_cost} "
                    f"!= linear {linear.total_cost}",
                    details={
                        "instance": task.name,
                        "variant": variant.value,
                        "q_mult": task.q_mult,
                        "b_mult": task.b_mult,
                        "alpha": params.alpha,
                        "beta": params.beta,
                    },
                )
            check_counter_bound(linear, variant)

            pair = [
                _row(task, data, variant, Algorithm.BELLMAN, params, bellman, bellman_ms),
                _row(task, data, variant, Algorithm.LINEAR, params, linear, linear_ms),
            ]
            rows.extend(pair)
            logger.info(
                "bench_cell_timed",
                instance=task.name,
                variant=variant.value,
                q_mult=task.q_mult,
                b_mult=task.b_mult,
                alpha=params.alpha,
                beta=params.beta,
                bellman_ms=pair[0].mean_ms,
                linear_ms=pair[1].mean_ms,
                min_ms=pair[1].min_ms,
                speedup=_ratio(pair[0].mean_ms, pair[1].mean_ms),
                routes=pair[1].routes,
            )
    return rows


def _ratio(numerator: float, denominator: float) -> float:
    return numerator / denominator if denominator > 0 else math.inf


class BenchService:
    """Builds the instance grid and times every cell."""

    def __init__(self):
        self.instance_service = InstanceService()

    def tasks(self, config: BenchConfig) -> List[CellTask]:
        tasks: List[CellTask] = []
        for seed, n in itertools.product(config.seeds, config.sizes):
            base, tour = self.instance_service.generate_base(n, seed, q=config.base_q)
            extended = self.instance_service.extend_to_spdtw(
                base, tour, seed, config.service_time
            )
            name = f"gen-n{n}-s{seed}"
            for q_cell, b_mult in config.cells:
                q_mult = q_cell / config.base_q
                tasks.append(
                    CellTask(
                        name=name,
                        instance=self.instance_service.apply_multipliers(extended, q_mult, b_mult),
                        tour=tour,
                        q_mult=q_mult,
                        b_mult=float(b_mult),
                        variants=tuple(config.variants),
                        alphas=tuple(config.alphas),
                        betas=tuple(config.betas),
                        warmups=config.warmups,
                        reps=config.reps,
                    )
                )
        return tasks

    def run_benchmark(self, config: BenchConfig) -> BenchReport:
        tasks = self.tasks(config)
        logger.info(
            "bench_started",
            cells=len(tasks),
            sizes=config.sizes,
            variants=config.variants,
            reps=config.reps,
            warmups=config.warmups,
            parallel=config.parallel,
        )
        started = time.perf_counter()
        report = BenchReport()
        if config.parallel:
            with ProcessPoolExecutor(max_workers=config.workers) as pool:
                for rows in pool.map(time_cell, tasks):
                    report.rows.extend(rows)
        else:
            for task in tasks:
                report.rows.extend(time_cell(task))
        logger.info(
            "bench_completed",
            rows=len(report.rows),
            elapsed_ms=(time.perf_counter() - started) * 1e3,
        )
        return report


# ── Analysis ──────────────────────────────────────────────────────────

def fit_exponent(sizes: Sequence[float], times: Sequence[float]) -> float:
    """
    Least-squares slope of log(time) against log(n).

    Raises:
        InsufficientDataException: fewer than four distinct sizes, or a
            non-positive size or time
    """
    n = np.asarray(sizes, dtype=float)
    t = np.asarray(times, dtype=float)
    if len(np.unique(n)) < MIN_SCALING_SIZES:
        raise InsufficientDataException(
            f"Need at least {MIN_SCALING_SIZES} distinct sizes, got {len(np.unique(n))}"
        )
    if (n <= 0).any() or (t <= 0).any():
        raise InsufficientDataException("Sizes and times must be positive to fit on a log scale")
    slope, _ = np.polyfit(np.log(n), np.log(t), 1)
    return float(slope)


def estimate_scaling(rows: Iterable[BenchRow]) -> Dict[ScalingKey, float]:
    """
    Scaling exponent per (variant, algorithm, q_mult, b_mult, alpha, beta),
    fitted on mean times averaged over instances of equal size.
    """
    grouped: Dict[ScalingKey, Dict[int, List[float]]] = defaultdict(lambda: defaultdict(list))
    for row in rows:
        key = (row.variant, row.algorithm, row.q_mult, row.b_mult, row.alpha, row.beta)
        grouped[key][row.n].append(row.mean_ms)
    if not grouped:
        raise InsufficientDataException("No benchmark rows to fit")
    exponents: Dict[ScalingKey, float] = {}
    for key, by_size in grouped.items():
        sizes = sorted(by_size)
        exponents[key] = fit_exponent(sizes, [float(np.mean(by_size[n])) for n in sizes])
    return exponents


def speedup_series(rows: Iterable[BenchRow]) -> List[SpeedupRow]:
    """Bellman over linear mean time per size, averaged over instances."""
    times: Dict[tuple, Dict[str, List[float]]] = defaultdict(lambda: defaultdict(list))
    for row in rows:
        key = (row.variant, row.q_mult, row.b_mult, row.alpha, row.beta, row.n)
        times[key][row.algorithm].append(row.mean_ms)
    series: List[SpeedupRow] = []
    for key in sorted(times):
        by_algorithm = times[key]
        if Algorithm.BELLMAN.value not in by_algorithm or Algorithm.LINEAR.value not in by_algorithm:
            continue
        bellman_ms = float(np.mean(by_algorithm[Algorithm.BELLMAN.value]))
        linear_ms = float(np.mean(by_algorithm[Algorithm.LINEAR.value]))
        variant, q_mult, b_mult, alpha, beta, n = key
        series.append(
            SpeedupRow(
                variant=variant,
                q_mult=q_mult,
                b_mult=b_mult,
                alpha=alpha,
                beta=beta,
                n=n,
                bellman_ms=bellman_ms,
                linear_ms=linear_ms,
                speedup=_ratio(bellman_ms, linear_ms),
            )
        )
    return series
