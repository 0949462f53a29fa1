"""
Splits package - route evaluation, dominance predicates and the Split algorithms.
"""
from tour_split.splits.audit import AuditViolation, StateAuditor
from tour_split.splits.bellman import (
    bellman_cvrp,
    bellman_soft_vrpspd,
    bellman_soft_vrptw,
    bellman_vrpspdtw,
)
from tour_split.splits.cursor_deque import CursorDeque
from tour_split.splits.linear import (
    capacity_arc,
    evaluator_arc,
    generalized_split,
    linear_cvrp,
    linear_soft_vrpspd,
    linear_soft_vrptw,
    linear_vrpspdtw,
)
from tour_split.splits.oracle import exhaustive_split, oracle_route_scan, oracle_split
from tour_split.splits.registry import SPLIT_REGISTRY, get_split, list_splits, run_split
from tour_split.splits.state import HighestState, WarpState

__all__ = [
    "AuditViolation",
    "StateAuditor",
    "bellman_cvrp",
    "bellman_soft_vrpspd",
    "bellman_soft_vrptw",
    "bellman_vrpspdtw",
    "CursorDeque",
    "capacity_arc",
    "evaluator_arc",
    "generalized_split",
    "linear_cvrp",
    "linear_soft_vrpspd",
    "linear_soft_vrptw",
    "linear_vrpspdtw",
    "exhaustive_split",
    "oracle_route_scan",
    "oracle_split",
    "SPLIT_REGISTRY",
    "get_split",
    "list_splits",
    "run_split",
    "HighestState",
    "WarpState",
]
