"""
Split registry - maps (variant, algorithm) pairs to implementations.

HOW THE REGISTRY WORKS:
  1. Every Split is wrapped to the same call shape: (data, params, auditor)
  2. The CLI and the benchmark look a pair up here instead of branching
  3. Algorithms that take no penalty or no auditor simply ignore them

To add a Split: write it in bellman.py / linear.py, wrap it below, and add
one dict entry. The generalized queue Split is registered for the hard
variants only; it has no penalized form.
"""
from typing import Callable, Dict, List, Optional, Tuple

from tour_split.core.exceptions import UsageException
from tour_split.models.enums import Algorithm, Variant
from tour_split.models.params import NO_PENALTY, PenaltyParams
from tour_split.models.result import SplitResult
from tour_split.models.tour_data import TourData
from tour_split.splits import bellman, linear, oracle
from tour_split.splits.audit import StateAuditor

SplitFn = Callable[[TourData, PenaltyParams, Optional[StateAuditor]], SplitResult]


def _oracle(variant: Variant) -> SplitFn:
    return lambda data, params, auditor: oracle.oracle_split(data, variant, params)


def _generalized(variant: Variant) -> SplitFn:
    def run(data: TourData, params: PenaltyParams, auditor: Optional[StateAuditor]) -> SplitResult:
        is_arc = (
            linear.capacity_arc(data)
            if variant is Variant.CVRP
            else linear.evaluator_arc(data, variant)
        )
        return linear.generalized_split(data, is_arc, variant, auditor)

    return run


# ─── Registry ─────────────────────────────────────────────────────
SPLIT_REGISTRY: Dict[Tuple[Variant, Algorithm], SplitFn] = {
    # Bellman O(n^2), or O(nB) under hard constraints
    (Variant.CVRP, Algorithm.BELLMAN): lambda data, params, auditor: bellman.bellman_cvrp(data),
    (Variant.HARD_SPDTW, Algorithm.BELLMAN): lambda data, params, auditor: bellman.bellman_vrpspdtw(data),
    (Variant.SOFT_SPD, Algorithm.BELLMAN): lambda data, params, auditor: bellman.bellman_soft_vrpspd(data, params),
    (Variant.SOFT_TW, Algorithm.BELLMAN): lambda data, params, auditor: bellman.bellman_soft_vrptw(data, params),

    # Linear O(n)
    (Variant.CVRP, Algorithm.LINEAR): lambda data, params, auditor: linear.linear_cvrp(data, auditor),
    (Variant.HARD_SPDTW, Algorithm.LINEAR): lambda data, params, auditor: linear.linear_vrpspdtw(data, auditor),
    (Variant.SOFT_SPD, Algorithm.LINEAR): lambda data, params, auditor: linear.linear_soft_vrpspd(data, params, auditor),
    (Variant.SOFT_TW, Algorithm.LINEAR): lambda data, params, auditor: linear.linear_soft_vrptw(data, params, auditor),

    # Generalized queue Split over an arc predicate
    (Variant.CVRP, Algorithm.GENERALIZED): _generalized(Variant.CVRP),
    (Variant.HARD_SPDTW, Algorithm.GENERALIZED): _generalized(Variant.HARD_SPDTW),

    # Brute-force ground truth
    **{(variant, Algorithm.ORACLE): _oracle(variant) for variant in Variant},
}


def get_split(variant: Variant, algorithm: Algorithm) -> SplitFn:
    """
    Get the Split for a variant and algorithm.

    Raises:
        UsageException: If the pair is not registered
    """
    try:
        return SPLIT_REGISTRY[(Variant(variant), Algorithm(algorithm))]
    except (KeyError, ValueError):
        raise UsageException(
            f"No '{getattr(algorithm, 'value', algorithm)}' Split for variant "
            f"'{getattr(variant, 'value', variant)}'",
            code="UNSUPPORTED_SPLIT",
        )


def run_split(
    data: TourData,
    variant: Variant,
    algorithm: Algorithm,
    params: PenaltyParams = NO_PENALTY,
    auditor: Optional[StateAuditor] = None,
) -> SplitResult:
    return get_split(variant, algorithm)(data, params, auditor)


def list_splits() -> List[Tuple[str, str]]:
    """
    List all registered pairs.

    Returns:
        (variant, algorithm) values
    """
    return [(variant.value, algorithm.value) for variant, algorithm in SPLIT_REGISTRY]
