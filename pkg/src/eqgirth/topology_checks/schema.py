"""Topology check schema definitions.

This module defines the unit tangent frame sampled from the rotation lift and
the result of an angle accumulation around its singular point.
"""

import math
from typing import Self

from pydantic import BaseModel, ConfigDict, model_validator

from eqgirth.sphere_geom import SpherePoint

FRAME_TOLERANCE = 1e-12


class FrameSample(BaseModel):
    """A unit tangent vector attached to a point of the sphere.

    Attributes:
        base: The base point.
        vector: Unit vector orthogonal to ``base``.
    """
    model_config = ConfigDict(frozen=True)

    base: SpherePoint
    vector: tuple[float, float, float]

    @model_validator(mode="after")
    def _check_tangent(self) -> Self:
        vx, vy, vz = self.vector
        norm = math.sqrt(vx * vx + vy * vy + vz * vz)
        if abs(norm - 1.0) > FRAME_TOLERANCE:
            raise ValueError(f"frame vector has norm {norm!r}, expected 1")
        dot = vx * self.base.x + vy * self.base.y + vz * self.base.z
        if abs(dot) > FRAME_TOLERANCE:
            raise ValueError(f"frame vector is not tangent at its base (dot product {dot!r})")
        return self


class WindingResult(BaseModel):
    """Accumulated angle of a frame along a loop.

    Attributes:
        radius: Geodesic radius of the loop around the singular point.
        n_samples: Samples along the loop.
        total_angle: Sum of the wrapped angle increments, closing step included.
        winding: ``total_angle / 2π`` rounded to the nearest integer.
        residual: Distance of ``total_angle`` to ``2π·winding``.
    """
    model_config = ConfigDict(frozen=True)

    radius: float
    n_samples: int
    total_angle: float
    winding: int
    residual: float
