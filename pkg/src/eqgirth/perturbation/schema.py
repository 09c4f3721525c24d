"""Perturbation schema definitions.

Near a great circle the sphere is charted as an annulus with coordinates
(q, p), q ∈ [0, 2π), carrying the sphere's area form scaled to total area 1.
A perturbed equator is the graph p = f(q) of a zero-mean function.
"""

import math
from typing import NamedTuple, Self

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from eqgirth.hofer_bounds import BoundReport

AREA_SCALE = 4 * math.pi
SUM_TOLERANCE = 1e-9


class GraphPerturbation(BaseModel):
    """The graph t ↦ amplitude·sin(frequency·t + phase) over a great circle.

    An integer frequency makes the function zero-mean over [0, 2π]. Zero
    amplitude describes the unperturbed circle.

    Attributes:
        amplitude: Amplitude δ, at most 0.1.
        frequency: Positive integer frequency.
        phase: Phase offset.
    """
    model_config = ConfigDict(frozen=True)

    amplitude: float = Field(ge=0, le=0.1)
    frequency: int = Field(ge=1)
    phase: float = 0.0

    def __call__(self, t: ArrayLike) -> NDArray[np.float64]:
        return self.amplitude * np.sin(self.frequency * np.asarray(t, dtype=np.float64) + self.phase)

    def derivative(self, t: ArrayLike) -> NDArray[np.float64]:
        """First derivative in t."""
        return self.amplitude * self.frequency * np.cos(self.frequency * np.asarray(t, dtype=np.float64) + self.phase)

    def primitive(self, t: ArrayLike) -> NDArray[np.float64]:
        """The integral from 0 to t."""
        t = np.asarray(t, dtype=np.float64)
        return self.amplitude * (math.cos(self.phase) - np.cos(self.frequency * t + self.phase)) / self.frequency


class Intersections(NamedTuple):
    """Solutions of f(t) = g(t) in [0, 2π), strictly increasing."""

    count: int
    params: list[float]


class OverlapDecomposition(BaseModel):
    """Lens components between two perturbed graphs.

    Component i lies between intersection parameters i and i + 1 (cyclically);
    its signed area is positive where the first graph lies above the second.

    Attributes:
        intersection_params: Sorted intersection parameters in [0, 2π).
        component_signed_areas: Signed normalized area of every lens.
        largest_component_area: Largest absolute lens area.
    """
    model_config = ConfigDict(frozen=True)

    intersection_params: list[float]
    component_signed_areas: list[float]
    largest_component_area: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_ledger(self) -> Self:
        if len(self.intersection_params) != len(self.component_signed_areas):
            raise ValueError("one lens component is expected per intersection")
        if any(b <= a for a, b in zip(self.intersection_params, self.intersection_params[1:])):
            raise ValueError("intersection parameters must be strictly increasing")
        if abs(math.fsum(self.component_signed_areas)) > SUM_TOLERANCE:
            raise ValueError("signed lens areas of zero-mean graphs must sum to zero")
        return self

    @property
    def total_absolute_area(self) -> float:
        """Sum of the absolute lens areas."""
        return math.fsum(abs(area) for area in self.component_signed_areas)


class GraphFlowReport(BaseModel):
    """Comparison of the integrated Hamiltonian flow with the graph it should produce.

    Attributes:
        max_deviation: Largest |p(1) − sign·f(q)| over the sampled q.
        sign: Sign relating the time-1 image of the zero section to f.
        period_defect: H(2π) − H(0), zero iff the Hamiltonian is periodic in q.
        n_steps: Integrator steps.
        n_points: Sampled starting points on the zero section.
    """
    model_config = ConfigDict(frozen=True)

    max_deviation: float = Field(ge=0)
    sign: int
    period_defect: float
    n_steps: int
    n_points: int


class PerturbedEmbeddingReport(BaseModel):
    """Worst lens bound over all chart pairs of a perturbed great-circle embedding.

    Attributes:
        frequencies: Frequencies assigned to the chart pairs.
        amplitude: Common amplitude.
        pair: Frequencies of the pair attaining the worst bound.
        bound: The worst (largest) bound, still below 1/2.
        pair_bounds: Bound of every ordered pair, keyed "r,s".
    """
    model_config = ConfigDict(frozen=True)

    frequencies: tuple[int, ...]
    amplitude: float
    pair: tuple[int, int]
    bound: BoundReport
    pair_bounds: dict[str, float]
