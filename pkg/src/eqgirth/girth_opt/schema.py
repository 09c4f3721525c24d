"""Girth optimization schema definitions.

This module defines the result models of the cost maximization, the case-split
adjudication and the sampled diameter bound of the pipe-equator embedding.
"""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from eqgirth.conf.global_settings import SlackMode
from eqgirth.pipe_model import CostQuadruple, F
from eqgirth.sphere_geom import AngleCoords

ARGMAX_TOLERANCE = 1e-12


class OptimizationResult(BaseModel):
    """Global maximum of F over [0, 1/2]⁴ with its maximizers.

    Attributes:
        max_value: The maximum.
        argmax_points: Every maximizer found, in lexicographic order.
        grid_resolution: Step of the grid sweep.
        refined: Whether coordinate-wise refinement was applied.
        grid_points: Number of grid values per axis.
        canonical_argmax: Lexicographically smallest maximizer.
    """
    model_config = ConfigDict(frozen=True)

    max_value: float
    argmax_points: list[CostQuadruple]
    grid_resolution: float
    refined: bool
    grid_points: int
    canonical_argmax: CostQuadruple

    @model_validator(mode="after")
    def _check_argmax(self) -> Self:
        for q in self.argmax_points:
            if abs(float(F(q)) - self.max_value) > ARGMAX_TOLERANCE:
                raise ValueError(f"argmax point {q.as_tuple()} has F={float(F(q))!r}, expected {self.max_value!r}")
        return self


class ClaimStatus(BaseModel):
    """Grid status of one step of the case-split argument.

    Attributes:
        name: Short identifier of the claim.
        statement: The claim in words.
        holds: Whether no counterexample was found on the grid.
        checked: Number of grid points the claim applies to.
        counterexample_count: Number of grid points violating the claim.
        counterexamples: The first violating points in row-major order.
    """
    name: str
    statement: str
    holds: bool
    checked: int
    counterexample_count: int = 0
    counterexamples: list[CostQuadruple] = Field(default_factory=list)


class CaseSplitReport(BaseModel):
    """Adjudication of the inside/outside case split of the bound F ≤ 1/3.

    Attributes:
        grid_points: Grid values per axis.
        claims: Status of every checked claim.
    """
    grid_points: int
    claims: list[ClaimStatus]

    def claim(self, name: str) -> ClaimStatus:
        """Look up a claim by name.

        Raises:
            KeyError: If no claim has this name.
        """
        for status in self.claims:
            if status.name == name:
                return status
        raise KeyError(name)


class DiameterReport(BaseModel):
    """Sampled upper bound on the Hofer diameter of the pipe-equator embedding.

    Attributes:
        max_bound: Largest pairwise bound over all sample points.
        witness_pair: Sample points attaining ``max_bound``.
        delta: Pipe area.
        eps: Transition band width.
        grid: Samples in θ and φ.
        slack_mode: Pipe slack convention.
        core_bound: Largest bound over pairs inside the pipe region.
        core_witness_pair: Pipe-region points attaining ``core_bound``.
        core_witness_bound: ``core_witness_pair`` rescored by the scalar pair bound
            from its pipe parameters (None without pipe points).
        band_bound: Largest bound over pairs with a point in a band.
        band_slack: Excess of ``band_bound`` over ``core_bound`` (0 if none).
        pipe_points: Number of samples in the pipe region.
        band_points: Number of samples in the bands.
    """
    model_config = ConfigDict(frozen=True)

    max_bound: float = Field(ge=0)
    witness_pair: tuple[AngleCoords, AngleCoords]
    delta: float
    eps: float
    grid: tuple[int, int]
    slack_mode: SlackMode
    core_bound: float = Field(ge=0)
    core_witness_pair: tuple[AngleCoords, AngleCoords]
    core_witness_bound: float | None = None
    band_bound: float = Field(ge=0)
    band_slack: float = Field(ge=0)
    pipe_points: int
    band_points: int
