"""
Domain types for giant-tour splitting.

Raw instances and tours come in, tour-projected data with prefix sums goes
to the Split algorithms, labelled shortest paths come out.
"""
from tour_split.models.enums import Algorithm, ScheduleMode, Variant
from tour_split.models.instance import Instance, Tour
from tour_split.models.params import NO_PENALTY, PenaltyParams
from tour_split.models.result import OpCounters, Route, SplitResult, reconstruct_routes
from tour_split.models.tour_data import TourData, compute_warp_prefix, project_tour

__all__ = [
    "Algorithm",
    "ScheduleMode",
    "Variant",
    "Instance",
    "Tour",
    "NO_PENALTY",
    "PenaltyParams",
    "OpCounters",
    "Route",
    "SplitResult",
    "reconstruct_routes",
    "TourData",
    "compute_warp_prefix",
    "project_tour",
]
