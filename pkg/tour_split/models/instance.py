"""
Raw problem instance and giant tour.

Customer arrays are indexed by the original customer label minus one (the
depot is implicit); coordinates and matrices include the depot at index 0.
Arcs are either read from explicit matrices or computed from coordinates,
in which case cost and travel time are the same Euclidean distance.
"""
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from tour_split.core.exceptions import InvalidInstanceException, InvalidTourException

Point = Tuple[float, float]
Matrix = Tuple[Tuple[float, ...], ...]


def _check_vector(name: str, values: Sequence[float], allow_inf: bool = False) -> None:
    arr = np.asarray(values, dtype=float)
    if np.isnan(arr).any():
        raise InvalidInstanceException(f"'{name}' contains NaN")
    if not allow_inf and np.isinf(arr).any():
        raise InvalidInstanceException(f"'{name}' must be finite")
    bad = np.flatnonzero(arr < 0)
    if bad.size:
        raise InvalidInstanceException(
            f"'{name}' has negative entries",
            details={"field": name, "indices": bad[:10].tolist()},
        )


@dataclass(frozen=True)
class Instance:
    """
    A single-depot routing instance.

    Closing windows and the horizon may be +inf (no deadline); capacity may be
    +inf (uncapacitated). Everything else must be finite and nonnegative.
    """

    q: float
    horizon: float
    demands: Tuple[float, ...]
    pickups: Tuple[float, ...]
    opens: Tuple[float, ...]
    closes: Tuple[float, ...]
    service: Tuple[float, ...]
    coords: Optional[Tuple[Point, ...]] = None
    cost_matrix: Optional[Matrix] = None
    time_matrix: Optional[Matrix] = None
    rounding: bool = True
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        n = len(self.demands)
        for name in ("pickups", "opens", "closes", "service"):
            if len(getattr(self, name)) != n:
                raise InvalidInstanceException(
                    f"'{name}' has {len(getattr(self, name))} entries, expected {n}"
                )
        _check_vector("q", [self.q], allow_inf=True)
        _check_vector("horizon", [self.horizon], allow_inf=True)
        _check_vector("demands", self.demands)
        _check_vector("pickups", self.pickups)
        _check_vector("opens", self.opens)
        _check_vector("closes", self.closes, allow_inf=True)
        _check_vector("service", self.service)

        late = [i + 1 for i, (a, b) in enumerate(zip(self.opens, self.closes)) if a > b]
        if late:
            raise InvalidInstanceException(
                "Opening time after closing time",
                details={"customers": late[:10]},
            )

        if self.coords is None and self.cost_matrix is None:
            raise InvalidInstanceException("Either coordinates or a cost matrix is required")
        if self.coords is not None:
            if len(self.coords) != n + 1:
                raise InvalidInstanceException(
                    f"Expected {n + 1} coordinates (depot first), got {len(self.coords)}"
                )
            if not np.isfinite(np.asarray(self.coords, dtype=float)).all():
                raise InvalidInstanceException("Coordinates must be finite")
        for name in ("cost_matrix", "time_matrix"):
            matrix = getattr(self, name)
            if matrix is None:
                continue
            arr = np.asarray(matrix, dtype=float)
            if arr.shape != (n + 1, n + 1):
                raise InvalidInstanceException(
                    f"'{name}' must be {n + 1}x{n + 1}, got {arr.shape}"
                )
            _check_vector(name, arr.ravel())

    # ── Derived ────────────────────────────────────────────────────

    @property
    def n(self) -> int:
        return len(self.demands)

    @cached_property
    def _coord_array(self) -> np.ndarray:
        return np.asarray(self.coords, dtype=float).reshape(-1, 2)

    @cached_property
    def _cost_array(self) -> np.ndarray:
        return np.asarray(self.cost_matrix, dtype=float)

    @cached_property
    def _time_array(self) -> np.ndarray:
        if self.time_matrix is None:
            return self._cost_array
        return np.asarray(self.time_matrix, dtype=float)

    def _euclidean(self, frm: np.ndarray, to: np.ndarray) -> np.ndarray:
        xy = self._coord_array
        dist = np.hypot(xy[frm, 0] - xy[to, 0], xy[frm, 1] - xy[to, 1])
        return np.rint(dist) if self.rounding else dist

    def arc_costs(self, frm: np.ndarray, to: np.ndarray) -> np.ndarray:
        """Vectorized c_{frm[k], to[k]} over node labels (0 = depot)."""
        if self.cost_matrix is not None:
            return self._cost_array[frm, to]
        return self._euclidean(frm, to)

    def arc_times(self, frm: np.ndarray, to: np.ndarray) -> np.ndarray:
        """Vectorized t_{frm[k], to[k]}; equals arc_costs when built from coordinates."""
        if self.cost_matrix is not None:
            return self._time_array[frm, to]
        return self._euclidean(frm, to)

    def cost(self, i: int, j: int) -> float:
        return float(self.arc_costs(np.array([i]), np.array([j]))[0])

    def travel_time(self, i: int, j: int) -> float:
        return float(self.arc_times(np.array([i]), np.array([j]))[0])

    @property
    def has_finite_horizon(self) -> bool:
        return not math.isinf(self.horizon)


@dataclass(frozen=True)
class Tour:
    """Giant tour: the visiting order of customer labels 1..n."""

    order: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Tour":
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.order)

    def validate(self, n: int) -> None:
        """Raise InvalidTourException unless the tour is a permutation of 1..n."""
        if len(self.order) != n:
            raise InvalidTourException(
                f"Tour has {len(self.order)} entries, instance has {n} customers"
            )
        seen = set()
        for position, label in enumerate(self.order, start=1):
            if not 1 <= label <= n:
                raise InvalidTourException(
                    f"Customer {label} at position {position} is out of range 1..{n}",
                    details={"position": position, "label": label},
                )
            if label in seen:
                raise InvalidTourException(
                    f"Customer {label} appears twice (again at position {position})",
                    details={"position": position, "label": label},
                )
            seen.add(label)
