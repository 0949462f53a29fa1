"""
Problem variants and Split algorithm families.

Values double as CLI choices and as the keys written to benchmark reports.
"""
from enum import Enum


class Variant(str, Enum):
    CVRP = "cvrp"
    HARD_SPDTW = "spdtw"
    SOFT_SPD = "soft-spd"
    SOFT_TW = "soft-tw"

    @property
    def is_soft(self) -> bool:
        return self in (Variant.SOFT_SPD, Variant.SOFT_TW)


class Algorithm(str, Enum):
    BELLMAN = "bellman"
    LINEAR = "linear"
    ORACLE = "oracle"
    GENERALIZED = "generalized"


class ScheduleMode(str, Enum):
    HARD = "hard"   # late arrival makes the route infeasible
    WARP = "warp"   # late arrival jumps back to the deadline and is charged
