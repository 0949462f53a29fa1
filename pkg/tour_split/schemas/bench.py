"""
Benchmark configuration and report rows.
"""
from typing import List, Optional, Tuple

from pydantic import Field, field_validator

from tour_split.core.config import settings
from tour_split.schemas.base import BaseSchema

# Order and spelling are part of the report format
REPORT_COLUMNS: Tuple[str, ...] = (
    "instance",
    "n",
    "variant",
    "algorithm",
    "q_mult",
    "b_mult",
    "alpha",
    "beta",
    "reps",
    "mean_ms",
    "median_ms",
    "stddev_ms",
    "cost",
    "pushes",
    "pops",
    "cursor_moves",
)

SPEEDUP_COLUMNS: Tuple[str, ...] = (
    "variant",
    "q_mult",
    "b_mult",
    "alpha",
    "beta",
    "n",
    "bellman_ms",
    "linear_ms",
    "speedup",
)


class BenchConfig(BaseSchema):
    """One benchmark grid. Defaults come from settings."""

    sizes: List[int] = Field(default_factory=lambda: list(settings.bench_sizes))
    cells: List[Tuple[int, int]] = Field(default_factory=lambda: list(settings.bench_cells))
    variants: List[str] = Field(default_factory=lambda: list(settings.bench_variants))
    alphas: List[float] = Field(default_factory=lambda: list(settings.bench_alphas))
    betas: List[float] = Field(default_factory=lambda: list(settings.bench_betas))
    seeds: List[int] = Field(default_factory=lambda: [1])
    warmups: int = Field(default_factory=lambda: settings.bench_warmups, ge=0)
    reps: int = Field(default_factory=lambda: settings.bench_reps, ge=1)
    base_q: int = Field(default_factory=lambda: settings.bench_base_q, gt=0)
    service_time: float = Field(default_factory=lambda: settings.gen_service_time, ge=0)
    parallel: bool = False
    workers: Optional[int] = None

    @field_validator("sizes")
    @classmethod
    def _positive_sizes(cls, value: List[int]) -> List[int]:
        if not value or any(n < 1 for n in value):
            raise ValueError("sizes must be a non-empty list of positive integers")
        return value

    @field_validator("variants")
    @classmethod
    def _benchable_variants(cls, value: List[str]) -> List[str]:
        allowed = {"cvrp", "spdtw", "soft-spd", "soft-tw"}
        unknown = sorted(set(value) - allowed)
        if unknown:
            raise ValueError(f"unknown variants {unknown}")
        return value


class BenchRow(BaseSchema):
    """Timing of one algorithm on one instance, variant and grid cell."""

    instance: str
    n: int
    variant: str
    algorithm: str
    q_mult: float
    b_mult: float
    alpha: float
    beta: float
    reps: int
    mean_ms: float
    median_ms: float
    stddev_ms: float
    cost: float
    pushes: int = 0
    pops: int = 0
    cursor_moves: int = 0
    # kept in memory and in logs, not in the CSV
    min_ms: float = 0.0
    routes: int = 0

    def csv_record(self) -> dict:
        return {column: getattr(self, column) for column in REPORT_COLUMNS}


class SpeedupRow(BaseSchema):
    variant: str
    q_mult: float
    b_mult: float
    alpha: float
    beta: float
    n: int
    bellman_ms: float
    linear_ms: float
    speedup: float
