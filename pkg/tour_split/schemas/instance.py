"""
Instance file schema.

JSON has no infinity, so an absent deadline (b, t_horizon) or an unlimited
capacity (q) is written as null.
"""
from typing import Any, Dict, List, Optional

from pydantic import Field, field_validator, model_validator

from tour_split.schemas.base import BaseSchema

FORMAT_VERSION = 1


class DepotRecord(BaseSchema):
    x: float
    y: float


class CustomerRecord(BaseSchema):
    """One customer, in label order (the first record is customer 1)."""

    d: float = Field(..., ge=0)
    p: float = Field(0.0, ge=0)
    a: float = Field(0.0, ge=0)
    b: Optional[float] = Field(None, ge=0)  # null = never closes
    s: float = Field(0.0, ge=0)
    x: Optional[float] = None
    y: Optional[float] = None

    @model_validator(mode="after")
    def _window_not_inverted(self) -> "CustomerRecord":
        if self.b is not None and self.a > self.b:
            raise ValueError(f"opening time {self.a} after closing time {self.b}")
        return self


class InstanceMeta(BaseSchema):
    """Provenance written by the generator; free-form otherwise."""

    seed: Optional[int] = None
    generator_params: Dict[str, Any] = Field(default_factory=dict)


class InstanceFile(BaseSchema):
    """Top-level instance document."""

    version: int = FORMAT_VERSION
    n: int = Field(..., ge=0)
    q: Optional[float] = Field(None, ge=0)           # null = uncapacitated
    t_horizon: Optional[float] = Field(None, ge=0)   # null = no horizon
    rounding: bool = True
    depot: Optional[DepotRecord] = None
    customers: List[CustomerRecord]
    cost_matrix: Optional[List[List[float]]] = None
    time_matrix: Optional[List[List[float]]] = None
    meta: InstanceMeta = Field(default_factory=InstanceMeta)

    @field_validator("version")
    @classmethod
    def _supported_version(cls, value: int) -> int:
        if value != FORMAT_VERSION:
            raise ValueError(f"unsupported format version {value}, expected {FORMAT_VERSION}")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "InstanceFile":
        if len(self.customers) != self.n:
            raise ValueError(f"n = {self.n} but {len(self.customers)} customers listed")
        has_coords = self.depot is not None
        if has_coords and any(c.x is None or c.y is None for c in self.customers):
            raise ValueError("every customer needs x and y when the depot has coordinates")
        if not has_coords and self.cost_matrix is None:
            raise ValueError("either depot/customer coordinates or cost_matrix is required")
        if self.time_matrix is not None and self.cost_matrix is None:
            raise ValueError("time_matrix given without cost_matrix")
        return self
