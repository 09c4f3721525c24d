"""Pipe equator schema definitions.

A pipe equator is built from two half-spheres joined through two thin strips
("pipes") of area δ each. It is determined by the pipe area and by the two
side areas a and b it cuts off.
"""

import math
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

Region = Literal["pipe", "transition", "polar"]

MAX_DELTA = 0.1


class PipeParams(BaseModel):
    """Parameters of a pipe equator.

    Attributes:
        a: Area of the side region C.
        b: Area of the side region L.
        delta: Area of each pipe, fixed per session.
    """
    model_config = ConfigDict(frozen=True)

    a: float
    b: float
    delta: float = Field(gt=0, le=MAX_DELTA)

    @model_validator(mode="after")
    def _check_box(self) -> Self:
        upper = 0.5 - self.delta
        for name, value in (("a", self.a), ("b", self.b)):
            if not 0.0 < value < upper:
                raise ValueError(f"{name}={value!r} outside (0, 1/2 - delta) = (0, {upper!r})")
        return self


class PlanarRegions(BaseModel):
    """Areas of the six regions cut out by a pipe equator and the reference circle.

    Attributes:
        L: Area of the region L (equal to b).
        R: Area of the region R (complement of L within its half).
        C: Area of the region C (equal to a).
        U: Area of the region U (complement of C within its half).
        Pe: Area of the exterior pipe.
        Pi: Area of the interior pipe.
    """
    model_config = ConfigDict(frozen=True)

    L: float = Field(ge=0)
    R: float = Field(ge=0)
    C: float = Field(ge=0)
    U: float = Field(ge=0)
    Pe: float = Field(ge=0)
    Pi: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_total(self) -> Self:
        total = math.fsum((self.L, self.R, self.C, self.U, self.Pe, self.Pi))
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"region areas sum to {total!r}, expected 1")
        return self

    @property
    def total(self) -> float:
        """Sum of the six areas."""
        return math.fsum((self.L, self.R, self.C, self.U, self.Pe, self.Pi))


class CostQuadruple(BaseModel):
    """Argument (a1, b1, a2, b2) of the cost functions, in the closed cube [0, 1/2]⁴.

    Attributes:
        a1: Side area a of the first pipe equator.
        b1: Side area b of the first pipe equator.
        a2: Side area a of the second pipe equator.
        b2: Side area b of the second pipe equator.
    """
    model_config = ConfigDict(frozen=True)

    a1: float = Field(ge=0, le=0.5)
    b1: float = Field(ge=0, le=0.5)
    a2: float = Field(ge=0, le=0.5)
    b2: float = Field(ge=0, le=0.5)

    def as_tuple(self) -> tuple[float, float, float, float]:
        """The coordinates in (a1, b1, a2, b2) order."""
        return (self.a1, self.b1, self.a2, self.b2)

    @classmethod
    def from_params(cls, p1: PipeParams, p2: PipeParams) -> Self:
        """Build the quadruple of two pipe equators."""
        return cls(a1=p1.a, b1=p1.b, a2=p2.a, b2=p2.b)
