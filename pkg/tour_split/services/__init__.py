"""
Service layer - instance generation, Split runs and benchmarking.

RULE: the CLI calls services. Services call repositories and splits. Never the reverse.
"""
from tour_split.services.bench_service import (
    BenchReport,
    BenchService,
    estimate_scaling,
    fit_exponent,
    speedup_series,
)
from tour_split.services.instance_service import InstanceService, ValidationReport
from tour_split.services.split_service import SplitOutcome, SplitService, counter_bound

__all__ = [
    "BenchReport",
    "BenchService",
    "estimate_scaling",
    "fit_exponent",
    "speedup_series",
    "InstanceService",
    "ValidationReport",
    "SplitOutcome",
    "SplitService",
    "counter_bound",
]
