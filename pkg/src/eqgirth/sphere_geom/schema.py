"""Data models for the normalized geometry of the unit sphere.

The sphere carries the area form scaled so that its total area is 1. Points
are unit 3-vectors; the fan coordinates (θ, φ) describe each point by the
circle through the south pole it lies on and its position along that circle.
"""

import math
from typing import Literal, Self

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

UNIT_TOLERANCE = 1e-12
MIN_SAMPLES = 16

Chart = Literal["sphere", "lambert", "plane"]


class SpherePoint(BaseModel):
    """A point on the unit sphere.

    Attributes:
        x: First coordinate.
        y: Second coordinate.
        z: Third coordinate.
    """
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    z: float

    @model_validator(mode="after")
    def _check_unit(self) -> Self:
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if abs(norm - 1.0) > UNIT_TOLERANCE:
            raise ValueError(f"point ({self.x}, {self.y}, {self.z}) has norm {norm!r}, expected 1")
        return self

    @classmethod
    def from_array(cls, vector: NDArray[np.float64] | tuple[float, float, float], normalize: bool = False) -> Self:
        """Build a point from any 3-vector.

        Args:
            vector: The coordinates.
            normalize: Scale the vector to unit length first.

        Returns:
            The sphere point.
        """
        v = np.asarray(vector, dtype=np.float64)
        if normalize:
            v = v / np.linalg.norm(v)
        return cls(x=float(v[0]), y=float(v[1]), z=float(v[2]))

    @property
    def array(self) -> NDArray[np.float64]:
        """The coordinates as a numpy array."""
        return np.array([self.x, self.y, self.z])

    def antipode(self) -> Self:
        """Return the antipodal point."""
        return type(self)(x=-self.x, y=-self.y, z=-self.z)


SOUTH_POLE = SpherePoint(x=0.0, y=0.0, z=-1.0)
NORTH_POLE = SpherePoint(x=0.0, y=0.0, z=1.0)


class AngleCoords(BaseModel):
    """Fan coordinates of a point away from the south pole.

    φ selects the circle through the south pole cut out by the plane that
    contains the x-direction and makes angle φ with the xz-plane; θ is the
    position along that circle, with θ = 0 (and 2π) at the south pole.

    Attributes:
        theta: Angle along the circle, wrapped into [0, 2π).
        phi: Angle of the circle's plane, strictly inside (-π/2, π/2).
    """
    model_config = ConfigDict(frozen=True)

    theta: float
    phi: float

    @field_validator("theta")
    @classmethod
    def _wrap_theta(cls, value: float) -> float:
        wrapped = math.fmod(value, 2 * math.pi)
        if wrapped < 0:
            wrapped += 2 * math.pi
        # fmod can land on 2π after the shift for tiny negative inputs
        return 0.0 if wrapped >= 2 * math.pi else wrapped

    @field_validator("phi")
    @classmethod
    def _check_phi(cls, value: float) -> float:
        if not -math.pi / 2 < value < math.pi / 2:
            raise ValueError(f"phi={value!r} outside (-pi/2, pi/2)")
        return value


class ClosedCurve(BaseModel):
    """An oriented closed curve given by ordered samples.

    The closing edge from the last sample back to the first is implied; the
    first sample must not be repeated at the end. Sphere samples are unit
    3-vectors, lambert samples are (θ, z) pairs and plane samples are (x, y)
    pairs.

    Attributes:
        samples: Array of shape (n, 3) or (n, 2).
        chart: Chart the samples are expressed in.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    samples: np.ndarray
    chart: Chart = "sphere"

    @field_validator("samples", mode="before")
    @classmethod
    def _as_array(cls, value: object) -> NDArray[np.float64]:
        return np.array(value, dtype=np.float64)

    @model_validator(mode="after")
    def _check_samples(self) -> Self:
        samples = self.samples
        width = 3 if self.chart == "sphere" else 2
        if samples.ndim != 2 or samples.shape[1] != width:
            raise ValueError(f"{self.chart} samples must have shape (n, {width}), got {samples.shape}")
        if len(samples) < MIN_SAMPLES:
            raise ValueError(f"a closed curve needs at least {MIN_SAMPLES} samples, got {len(samples)}")

        steps = np.linalg.norm(np.roll(samples, -1, axis=0) - samples, axis=1)
        if np.any(steps == 0.0):
            raise ValueError("consecutive samples must be distinct (is the endpoint duplicated?)")

        if self.chart == "sphere":
            norms = np.linalg.norm(samples, axis=1)
            if np.max(np.abs(norms - 1.0)) > 1e-9:
                raise ValueError("sphere samples must be unit vectors")
        return self

    def __len__(self) -> int:
        return len(self.samples)

    def reversed(self) -> "ClosedCurve":
        """Return the same curve with the opposite orientation."""
        return ClosedCurve(samples=self.samples[::-1].copy(), chart=self.chart)

    def to_sphere(self) -> "ClosedCurve":
        """Express the curve in sphere coordinates.

        Lambert samples (θ, z) are mapped back onto the sphere; sphere curves
        are returned unchanged.

        Raises:
            ValueError: For plane curves, which carry no sphere embedding.
        """
        if self.chart == "sphere":
            return self
        if self.chart == "plane":
            raise ValueError("a plane curve has no sphere embedding")

        theta, z = self.samples[:, 0], self.samples[:, 1]
        r = np.sqrt(np.clip(1.0 - z * z, 0.0, None))
        return ClosedCurve(samples=np.column_stack([r * np.cos(theta), r * np.sin(theta), z]))
