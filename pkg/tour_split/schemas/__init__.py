"""
Pydantic schemas for file formats and benchmark configuration.
"""
from tour_split.schemas.base import BaseSchema
from tour_split.schemas.bench import (
    REPORT_COLUMNS,
    SPEEDUP_COLUMNS,
    BenchConfig,
    BenchRow,
    SpeedupRow,
)
from tour_split.schemas.instance import (
    FORMAT_VERSION,
    CustomerRecord,
    DepotRecord,
    InstanceFile,
    InstanceMeta,
)

__all__ = [
    "BaseSchema",
    "REPORT_COLUMNS",
    "SPEEDUP_COLUMNS",
    "BenchConfig",
    "BenchRow",
    "SpeedupRow",
    "FORMAT_VERSION",
    "CustomerRecord",
    "DepotRecord",
    "InstanceFile",
    "InstanceMeta",
]
