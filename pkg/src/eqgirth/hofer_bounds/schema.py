"""Hofer bound report schema.

A bound report is a certified inequality on a Hofer norm or Hofer distance.
Values are dimensionless because the sphere carries total area 1.
"""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

BoundKind = Literal["upper", "lower"]
BoundSource = Literal[
    "rotation_norm",
    "energy_capacity",
    "antipodal",
    "unoriented_rotation",
    "cost_function",
    "perturbation_lemma",
]


class BoundReport(BaseModel):
    """A named upper or lower Hofer bound with its provenance.

    Attributes:
        kind: Whether the value bounds from above or below.
        value: The bound.
        source: The inequality that produced the bound.
        detail: Free-text description of the inputs.
    """
    model_config = ConfigDict(frozen=True)

    kind: BoundKind
    value: float = Field(ge=0)
    source: BoundSource
    detail: str = ""

    @model_validator(mode="after")
    def _check_rotation_cap(self) -> Self:
        if self.source == "rotation_norm" and self.kind == "upper" and self.value > 0.5:
            raise ValueError(f"rotation bound {self.value!r} exceeds 1/2")
        return self
