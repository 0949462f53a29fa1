"""
Split outputs: routes, operation counters and the labelled shortest path.
"""
import math
from dataclasses import dataclass
from typing import List, NamedTuple, Sequence, Tuple

from tour_split.core.exceptions import CorruptResultException, NoFeasibleSplitException


class Route(NamedTuple):
    """Route (start, end]: depot, positions start+1..end, depot."""

    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start

    @property
    def positions(self) -> range:
        return range(self.start + 1, self.end + 1)


@dataclass(frozen=True)
class OpCounters:
    """
    Deque work done by one Split run.

    cursor_moves counts forward cursor advances (updates that remove
    nothing). A backward move is always followed by a removal, so it is
    tallied separately in cursor_retreats and already paid for in pops.
    """

    pushes: int = 0
    pops: int = 0
    cursor_moves: int = 0
    cursor_retreats: int = 0

    @property
    def total(self) -> int:
        return self.pushes + self.pops + self.cursor_moves

    def __add__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(
            pushes=self.pushes + other.pushes,
            pops=self.pops + other.pops,
            cursor_moves=self.cursor_moves + other.cursor_moves,
            cursor_retreats=self.cursor_retreats + other.cursor_retreats,
        )


@dataclass(frozen=True)
class SplitResult:
    """Labels of the shortest path from depot copy 0_0 to 0_n."""

    variant: str
    algorithm: str
    pot: Tuple[float, ...]
    pred: Tuple[int, ...]
    routes: Tuple[Route, ...]
    total_cost: float
    counters: OpCounters = OpCounters()

    @property
    def n(self) -> int:
        return len(self.pot) - 1

    @classmethod
    def from_labels(
        cls,
        variant: str,
        algorithm: str,
        pot: Sequence[float],
        pred: Sequence[int],
        counters: OpCounters = OpCounters(),
    ) -> "SplitResult":
        """
        Freeze the DP labels and backtrack the routes.

        Raises:
            NoFeasibleSplitException: pot[n] is still the +inf sentinel
        """
        n = len(pot) - 1
        if math.isinf(pot[n]):
            unreachable = next(j for j in range(n + 1) if math.isinf(pot[j]))
            raise NoFeasibleSplitException(
                f"No admissible partition: depot copy {unreachable} is unreachable",
                details={"variant": variant, "algorithm": algorithm, "position": unreachable},
            )
        return cls(
            variant=variant,
            algorithm=algorithm,
            pot=tuple(float(v) for v in pot),
            pred=tuple(int(v) for v in pred),
            routes=tuple(reconstruct_routes(pred, n)),
            total_cost=float(pot[n]),
            counters=counters,
        )


def reconstruct_routes(pred: Sequence[int], n: int) -> List[Route]:
    """
    Walk pred back from n to 0 and return the routes in tour order.

    Raises:
        CorruptResultException: a step that does not strictly decrease or
            leaves the range 0..n
    """
    routes: List[Route] = []
    j = n
    while j > 0:
        i = pred[j]
        if not 0 <= i < j:
            raise CorruptResultException(
                f"pred[{j}] = {i} does not point to an earlier depot copy",
                details={"position": j, "pred": i},
            )
        routes.append(Route(i, j))
        j = i
    routes.reverse()
    return routes
