"""
Repository layer - file persistence.

Repositories own every file format, keeping parsing and serialization out
of the service and CLI layers.
"""
from tour_split.repositories.instance_repository import InstanceRepository
from tour_split.repositories.report_repository import ReportRepository

__all__ = [
    "InstanceRepository",
    "ReportRepository",
]
