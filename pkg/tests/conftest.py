"""
Test fixtures for tour-split.

Env overrides MUST happen before any `tour_split.*` import; settings are
read at import time. Benchmarks run with tiny repetition counts here.

Tiers: the default run uses `-m "not slow"` (see pytest.ini); acceptance-scale
seed counts, exhaustive partitions and scaling fits are marked `slow`:
    pytest -m slow
"""
import os

# ── Env overrides BEFORE importing the package ─────────────────────────
os.environ["SPLIT_ENVIRONMENT"] = "development"
os.environ["SPLIT_DEBUG"] = "false"
os.environ["SPLIT_AUDIT_LINEAR"] = "false"
os.environ["SPLIT_BENCH_WARMUPS"] = "0"
os.environ["SPLIT_BENCH_REPS"] = "2"

import pytest  # noqa: E402

from tour_split.models.tour_data import project_tour  # noqa: E402
from tour_split.services.instance_service import InstanceService  # noqa: E402

# Oracle-equivalence sizes
SIZES = (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144)
FAST_SIZES = (1, 2, 3, 5, 8, 13, 21, 34)

# Worked example: optimal labels of the identity tour
EXAMPLE_POT = (0, 10, 10, 22, 27, 39, 53, 63, 72, 79, 88)
EXAMPLE_PRED = (0, 0, 0, 0, 0, 2, 3, 3, 4, 5, 8)


@pytest.fixture
def instance_service():
    return InstanceService()


@pytest.fixture
def example(instance_service):
    """(Instance, Tour) of the ten-customer worked example."""
    return instance_service.worked_example()


@pytest.fixture
def example_data(example):
    return project_tour(*example)
