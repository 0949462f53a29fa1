"""Penalty factors for the soft-constrained variants."""
import math
from dataclasses import dataclass

from tour_split.core.exceptions import InvalidConfigException


@dataclass(frozen=True)
class PenaltyParams:
    """alpha charges excess load, beta charges time warp (both per unit)."""

    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if math.isnan(value) or value < 0:
                raise InvalidConfigException(
                    f"Penalty factor '{name}' must be nonnegative, got {value}",
                    details={name: value},
                )


NO_PENALTY = PenaltyParams()
