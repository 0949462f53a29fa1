"""
Library and CLI configuration using Pydantic Settings.
Everything is read from ``SPLIT_*`` environment variables (or a ``.env`` file).
"""
from functools import lru_cache
from typing import List, Tuple

from pydantic import model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# (Q, closing-window multiplier) columns of the speedup grid
DEFAULT_BENCH_CELLS: List[Tuple[int, int]] = [
    (100, 10),
    (200, 20),
    (500, 50),
    (1000, 100),
    (2000, 200),
    (5000, 500),
    (10000, 1000),
    (20000, 2000),
    (50000, 5000),
    (100000, 10000),
]


class Settings(BaseSettings):
    """Settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SPLIT_",
        case_sensitive=False,
    )

    # Application
    app_name: str = "tour-split"
    app_version: str = "1.0.0"
    debug: bool = False
    environment: str = "development"  # development, ci, production

    # Oracle
    oracle_cap: int = 300  # O(n^3) beyond this is refused

    # Instrumented runs recompute every queue front with the evaluator
    audit_linear: bool = False

    # Benchmark
    bench_warmups: int = 3
    bench_reps: int = 10
    bench_sizes: List[int] = [250, 500, 1000, 2000]
    bench_cells: List[Tuple[int, int]] = DEFAULT_BENCH_CELLS
    bench_variants: List[str] = ["spdtw", "soft-spd", "soft-tw"]
    bench_alphas: List[float] = [10.0]
    bench_betas: List[float] = [10.0]
    bench_base_q: int = 100

    # Instance generation
    gen_coord_min: float = 0.0
    gen_coord_max: float = 1000.0
    gen_demand_min: int = 1
    gen_demand_max: int = 40
    gen_service_time: float = 10.0
    gen_tour_prefix: int = 20       # customers driven through to derive T
    gen_window_min_frac: float = 0.05
    gen_window_max_frac: float = 0.25

    # Relative slack when checking unrounded distances for metricity
    triangle_tolerance: float = 1e-9

    @property
    def json_logs(self) -> bool:
        """Machine-readable logs everywhere except local development."""
        return self.environment != "development"

    @model_validator(mode="after")
    def _reject_inconsistent_values(self) -> "Settings":
        """Fail loud on settings no run could honour."""
        if self.bench_reps < 1:
            raise ValueError("'bench_reps' must be at least 1")
        if self.bench_warmups < 0:
            raise ValueError("'bench_warmups' must not be negative")
        if self.oracle_cap < 0:
            raise ValueError("'oracle_cap' must not be negative")
        if self.gen_coord_min > self.gen_coord_max:
            raise ValueError("'gen_coord_min' exceeds 'gen_coord_max'")
        if not 0 <= self.gen_demand_min <= self.gen_demand_max:
            raise ValueError("demand range must satisfy 0 <= min <= max")
        if not 0 < self.gen_window_min_frac <= self.gen_window_max_frac <= 1:
            raise ValueError("window fractions must satisfy 0 < min <= max <= 1")
        for q, b_mult in self.bench_cells:
            if q < self.bench_base_q or b_mult < 1:
                raise ValueError(
                    f"bench cell ({q}, {b_mult}) would shrink the base instance; "
                    f"Q must be >= {self.bench_base_q} and b_mult >= 1"
                )
        return self


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


settings = get_settings()
