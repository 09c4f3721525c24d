"""Global settings configuration for eqgirth.

This module defines the application-wide settings using Pydantic BaseSettings,
supporting configuration via environment variables and .env files. The numeric
parameters of a verification run live in the nested ``RunConfig`` model.
"""

import math
from fractions import Fraction
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

SlackMode = Literal["one_delta", "two_delta"]
OutputFormat = Literal["json", "csv"]


def parse_fraction(value: object) -> Fraction:
    """Parse a fraction from a ``"p/q"`` string, a decimal string or a number.

    Floats are routed through their decimal representation so ``0.01`` becomes
    ``1/100`` rather than its binary expansion.

    Args:
        value: The raw value.

    Returns:
        The parsed fraction.

    Raises:
        ValueError: If the value cannot be parsed.

    Examples:
        >>> parse_fraction("1/120")
        Fraction(1, 120)
        >>> parse_fraction(0.01)
        Fraction(1, 100)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a fraction")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"cannot parse fraction from {value!r}") from e
    raise ValueError(f"cannot parse fraction from {value!r}")


FractionField = Annotated[
    Fraction,
    BeforeValidator(parse_fraction),
    PlainSerializer(lambda f: f"{f.numerator}/{f.denominator}", return_type=str),
]


class RunConfig(BaseModel):
    """Numeric parameters of a verification run.

    Attributes:
        delta: Pipe area.
        eps: Width of the transition bands (radians).
        resolution: Grid step of the cost-function sweep, kept exact.
        grid_theta: Number of θ samples of the embedding grid.
        grid_phi: Number of φ samples of the embedding grid.
        pipe_slack_mode: Whether the pipe slack is one or two pipe areas.
        output_format: ``json`` writes the report only, ``csv`` adds grid dumps.
        seed: Seed for randomized property sampling.
        case_split_points: Points per axis of the case-split grids.
        r: Frequency of the first perturbation graph.
        s: Frequency of the second perturbation graph.
        amplitude: Amplitude of both perturbation graphs.
        flow_steps: Integrator steps of the graph flow check.
        radii: Geodesic radii of the winding loops.
        n_samples: Samples per winding loop.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    delta: float = Field(default=0.01, gt=0, le=0.1, description="Pipe area")
    eps: float = Field(default=0.05, gt=0, lt=math.pi / 8, description="Transition band width")
    resolution: FractionField = Field(default=Fraction(1, 120), description="Cost grid step")
    grid_theta: int = Field(default=128, ge=32, description="θ samples of the embedding grid")
    grid_phi: int = Field(default=64, ge=32, description="φ samples of the embedding grid")
    pipe_slack_mode: SlackMode = Field(default="one_delta", description="Pipe slack mode")
    output_format: OutputFormat = Field(default="json", description="Report format")
    seed: int = Field(default=0, description="Seed for randomized sampling")
    case_split_points: int = Field(default=31, ge=7, description="Points per axis of the case-split grids")
    r: int = Field(default=2, ge=1, description="Frequency of the first graph")
    s: int = Field(default=3, ge=1, description="Frequency of the second graph")
    amplitude: float = Field(default=0.05, gt=0, le=0.1, description="Graph amplitude")
    flow_steps: int = Field(default=1000, ge=100, description="Graph flow integrator steps")
    radii: tuple[float, ...] = Field(default=(0.05, 0.1, 0.2), min_length=1, description="Winding loop radii")
    n_samples: int = Field(default=4096, ge=256, description="Samples per winding loop")

    @field_validator("resolution")
    @classmethod
    def _check_resolution(cls, value: Fraction) -> Fraction:
        if not Fraction(1, 10_000) <= value <= Fraction(1, 10):
            raise ValueError(f"resolution {value} outside [1e-4, 1e-1]")
        return value

    @field_validator("radii")
    @classmethod
    def _check_radii(cls, value: tuple[float, ...]) -> tuple[float, ...]:
        for radius in value:
            if not 1e-3 <= radius <= 0.3:
                raise ValueError(f"radius {radius} outside [1e-3, 0.3]")
        return value


class Settings(BaseSettings):
    """Application-wide settings for eqgirth.

    Settings can be configured via environment variables with the EQUATOR_GIRTH_
    prefix, or through a .env file. Nested settings use double underscore (__)
    as delimiter.

    Attributes:
        RUN: Numeric parameters of a verification run.
        THREADS: Cap on worker threads for grid sweeps (None means all cores).
        OUT_DIR: Directory for JSON reports and CSV dumps.
        RECORD_TIMING: Whether reports carry the wall time of the run.

    Examples:
        >>> # Via environment variables
        >>> # EQUATOR_GIRTH_THREADS=4
        >>> # EQUATOR_GIRTH_RUN__DELTA=0.02
        >>> settings = Settings()
    """
    model_config = SettingsConfigDict(
        env_prefix="EQUATOR_GIRTH_",
        env_file=".env",
        env_nested_delimiter="__",
        env_nested_max_split=1,
    )

    RUN: RunConfig = Field(default_factory=RunConfig, description="Numeric parameters of a run")

    THREADS: int | None = Field(
        default=None,
        ge=1,
        description="Cap on worker threads for grid sweeps",
    )

    # Storage settings
    OUT_DIR: Path = Field(
        default_factory=lambda: Path.cwd() / "out",
        description="Directory for JSON reports and CSV dumps",
    )
    RECORD_TIMING: bool = Field(
        default=True,
        description="Whether reports carry the wall time of the run",
    )
