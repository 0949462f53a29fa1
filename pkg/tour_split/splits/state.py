"""Per-predecessor bookkeeping shared by the soft linear Splits and their predicates."""
from dataclasses import dataclass, field
from typing import List


@dataclass
class WarpState:
    """
    r[i] > 0 means route (i, .] first warps at position q[i] by r[i] time
    units; r[i] <= 0 means no warp has been detected for i yet.
    """

    r: List[float] = field(default_factory=list)
    q: List[int] = field(default_factory=list)

    @classmethod
    def empty(cls, n: int) -> "WarpState":
        return cls(r=[0.0] * (n + 1), q=[0] * (n + 1))


@dataclass
class HighestState:
    """h[i] is the peak-load position tracked for predecessor i (starts at i itself)."""

    h: List[int] = field(default_factory=list)

    @classmethod
    def initial(cls, n: int) -> "HighestState":
        return cls(h=list(range(n + 1)))
