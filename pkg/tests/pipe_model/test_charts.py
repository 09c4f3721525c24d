"""Tests for the pipe-equator area charts."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from eqgirth.exceptions import DomainError
from eqgirth.pipe_model import (
    PipeParams,
    PlanarRegions,
    a_of_phi,
    area_S,
    b_of_theta,
    pipe_params_at,
    planar_regions,
    region_of,
)

DELTA = 0.01
EPS = 0.05


class TestAreaCharts:
    """Test cases for area_S, a_of_phi and b_of_theta."""

    def test_area_S_endpoints(self) -> None:
        """Test that Area(S) runs from 1/4 − δ/2 down to 0, exactly."""
        assert area_S(0.0, DELTA, EPS) == 0.25 - DELTA / 2
        assert area_S(math.pi / 2 - EPS, DELTA, EPS) == 0.0

    def test_area_S_is_decreasing(self) -> None:
        """Test that Area(S) decreases on its domain."""
        phis = np.linspace(0.0, math.pi / 2 - EPS, 50)
        values = [area_S(float(p), DELTA, EPS) for p in phis]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_a_of_phi_matches_area_S(self) -> None:
        """Test that a(φ) coincides with Area(S) on [0, π/2 − ε] at 10³ samples."""
        for phi in np.linspace(0.0, math.pi / 2 - EPS, 1000):
            assert abs(a_of_phi(float(phi), DELTA, EPS) - area_S(float(phi), DELTA, EPS)) <= 1e-15

    def test_a_of_phi_lower_end(self) -> None:
        """Test that a(φ) reaches 1/2 − δ at φ = −(π/2 − ε)."""
        assert a_of_phi(-(math.pi / 2 - EPS), DELTA, EPS) == pytest.approx(0.5 - DELTA, abs=1e-15)

    def test_b_of_theta_endpoints(self) -> None:
        """Test that b runs from 1/2 − δ at θ = 0 to 0 at θ = 2π, exactly."""
        assert b_of_theta(0.0, DELTA) == 0.5 - DELTA
        assert b_of_theta(2 * math.pi, DELTA) == 0.0

    @pytest.mark.parametrize(
        ("func", "args"),
        [
            (area_S, (-0.1, DELTA, EPS)),
            (area_S, (0.1, 0.2, EPS)),
            (area_S, (0.1, DELTA, 1.0)),
            (a_of_phi, (math.pi / 2, DELTA, EPS)),
            (b_of_theta, (7.0, DELTA)),
            (b_of_theta, (1.0, 0.0)),
        ],
    )
    def test_domain(self, func, args: tuple) -> None:
        """Test that arguments outside the declared ranges are rejected."""
        with pytest.raises(DomainError):
            func(*args)


class TestRegions:
    """Test cases for region_of and pipe_params_at."""

    @pytest.mark.parametrize(
        ("phi", "expected"),
        [
            (0.0, "pipe"),
            (-(math.pi / 2 - 2 * EPS), "pipe"),
            (math.pi / 2 - 1.5 * EPS, "transition"),
            (-(math.pi / 2 - EPS), "transition"),
            (math.pi / 2 - 0.5 * EPS, "polar"),
        ],
    )
    def test_region_of(self, phi: float, expected: str) -> None:
        """Test the classification of fan angles."""
        assert region_of(phi, EPS) == expected

    def test_pipe_params_at(self) -> None:
        """Test the pull-back of a pipe-region point."""
        p = pipe_params_at(math.pi, 0.0, DELTA, EPS)
        assert p.a == pytest.approx(0.25 - DELTA / 2)
        assert p.b == pytest.approx((0.5 - DELTA) / 2)
        assert p.delta == DELTA

    def test_pipe_params_outside_pipe_region(self) -> None:
        """Test that band points have no pipe parameters."""
        with pytest.raises(DomainError):
            pipe_params_at(1.0, math.pi / 2 - EPS, DELTA, EPS)

    def test_pipe_params_on_seam(self) -> None:
        """Test that θ = 0 maps onto the closed end of the parameter box."""
        with pytest.raises(DomainError):
            pipe_params_at(0.0, 0.0, DELTA, EPS)


class TestPlanarRegions:
    """Test cases for the planar area bookkeeping."""

    def test_regions_sum_to_one(self) -> None:
        """Test that the six regions carry the whole area."""
        regions = planar_regions(PipeParams(a=0.2, b=0.3, delta=DELTA))
        assert regions.L == 0.3
        assert regions.C == 0.2
        assert regions.Pe == regions.Pi == DELTA
        assert regions.total == pytest.approx(1.0, abs=1e-12)

    def test_params_box(self) -> None:
        """Test that side areas must lie in (0, 1/2 − δ)."""
        with pytest.raises(ValidationError):
            PipeParams(a=0.495, b=0.2, delta=DELTA)

    def test_regions_must_sum_to_one(self) -> None:
        """Test that inconsistent region areas are rejected."""
        with pytest.raises(ValidationError):
            PlanarRegions(L=0.3, R=0.3, C=0.3, U=0.3, Pe=0.01, Pi=0.01)

    def test_wrong_type(self) -> None:
        """Test that planar_regions needs pipe parameters."""
        with pytest.raises(DomainError):
            planar_regions((0.2, 0.3, DELTA))  # type: ignore[arg-type]
