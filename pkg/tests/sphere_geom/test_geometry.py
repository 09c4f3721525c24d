"""Tests for the normalized sphere geometry."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from eqgirth.exceptions import ChartError, DomainError, TopologyError
from eqgirth.sphere_geom import (
    NORTH_POLE,
    SOUTH_POLE,
    AngleCoords,
    ClosedCurve,
    SpherePoint,
    angle_between,
    angles_to_point,
    cap_area,
    cap_boundary,
    enclosed_area,
    great_circle,
    point_to_angles,
    rotate,
    rotate_curve,
    rotate_points,
)

E_X = SpherePoint(x=1.0, y=0.0, z=0.0)
E_Y = SpherePoint(x=0.0, y=1.0, z=0.0)


def _random_caps(seed: int, count: int) -> list[tuple[SpherePoint, float]]:
    rng = np.random.default_rng(seed)
    caps = []
    while len(caps) < count:
        center = SpherePoint.from_array(rng.normal(size=3), normalize=True)
        alpha = float(rng.uniform(0.1, math.pi - 0.1))
        polar = math.acos(center.z)
        if min(abs(polar - alpha), abs(math.pi - polar - alpha)) >= 0.2:
            caps.append((center, alpha))
    return caps


def _figure_eight(n: int = 64) -> ClosedCurve:
    s = (np.arange(n) + 0.5) * (2 * math.pi / n)
    lon = 0.5 * np.sin(s)
    lat = 0.5 * np.sin(s) * np.cos(s)
    return ClosedCurve(samples=np.column_stack([
        np.cos(lat) * np.cos(lon),
        np.cos(lat) * np.sin(lon),
        np.sin(lat),
    ]))


class TestSchema:
    """Test cases for the point and curve models."""

    def test_point_must_be_unit(self) -> None:
        """Test that a non-unit point is rejected."""
        with pytest.raises(ValidationError):
            SpherePoint(x=1.0, y=1.0, z=0.0)

    def test_antipode(self) -> None:
        """Test that the antipode of the north pole is the south pole."""
        assert NORTH_POLE.antipode() == SOUTH_POLE

    def test_theta_is_wrapped(self) -> None:
        """Test that theta is wrapped into [0, 2π)."""
        assert AngleCoords(theta=-math.pi / 2, phi=0.0).theta == pytest.approx(3 * math.pi / 2)
        assert AngleCoords(theta=2 * math.pi, phi=0.0).theta == 0.0

    def test_phi_range(self) -> None:
        """Test that phi must lie strictly inside (-π/2, π/2)."""
        with pytest.raises(ValidationError):
            AngleCoords(theta=0.0, phi=math.pi / 2)

    def test_curve_rejects_duplicated_endpoint(self) -> None:
        """Test that repeating the first sample at the end is rejected."""
        samples = great_circle(E_X, 32).samples
        with pytest.raises(ValidationError):
            ClosedCurve(samples=np.vstack([samples, samples[:1]]))

    def test_curve_needs_samples(self) -> None:
        """Test that a curve needs at least 16 samples."""
        with pytest.raises(ValidationError):
            ClosedCurve(samples=great_circle(E_X, 32).samples[::4])

    def test_lambert_to_sphere(self) -> None:
        """Test that Lambert samples map back onto the sphere."""
        theta = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)
        curve = ClosedCurve(samples=np.column_stack([theta, np.full(64, 0.5)]), chart="lambert")
        sphere = curve.to_sphere().samples
        assert np.allclose(np.linalg.norm(sphere, axis=1), 1.0)
        assert np.allclose(sphere[:, 2], 0.5)


class TestFanCoordinates:
    """Test cases for angles_to_point and point_to_angles."""

    @pytest.mark.parametrize("phi", [-1.2, -0.3, 0.0, 0.7, 1.4])
    def test_theta_zero_is_south_pole(self, phi: float) -> None:
        """Test that every fan circle starts at the south pole."""
        p = angles_to_point(AngleCoords(theta=0.0, phi=phi))
        assert p.array == pytest.approx(SOUTH_POLE.array, abs=1e-12)

    def test_far_point_of_central_circle(self) -> None:
        """Test that θ = π on the central circle is the north pole."""
        p = angles_to_point(AngleCoords(theta=math.pi, phi=0.0))
        assert p.array == pytest.approx(NORTH_POLE.array, abs=1e-12)

    def test_quarter_turn_of_central_circle(self) -> None:
        """Test that θ = π/2 on the central circle is the x-direction."""
        p = angles_to_point(AngleCoords(theta=math.pi / 2, phi=0.0))
        assert p.array == pytest.approx(E_X.array, abs=1e-12)

    def test_round_trip(self) -> None:
        """Test that point_to_angles inverts angles_to_point away from the south pole."""
        rng = np.random.default_rng(7)
        for theta, phi in zip(rng.uniform(0.5, 2 * math.pi - 0.5, 200), rng.uniform(-1.3, 1.3, 200)):
            c = point_to_angles(angles_to_point(AngleCoords(theta=theta, phi=phi)))
            assert c.theta == pytest.approx(theta, abs=1e-10)
            assert c.phi == pytest.approx(phi, abs=1e-10)

    @pytest.mark.parametrize("theta", np.linspace(0.0, 2 * math.pi, 25, endpoint=False))
    def test_central_circle_is_in_xz_plane(self, theta: float) -> None:
        """Test that the circle φ = 0 has y = 0 everywhere."""
        assert angles_to_point(AngleCoords(theta=theta, phi=0.0)).y == pytest.approx(0.0, abs=1e-15)

    def test_degenerate_circle(self) -> None:
        """Test that |φ| near π/2 is rejected."""
        with pytest.raises(DomainError):
            angles_to_point(AngleCoords(theta=1.0, phi=math.pi / 2 - 1e-12))

    def test_south_pole_has_no_coordinates(self) -> None:
        """Test that the south pole cannot be pulled back."""
        with pytest.raises(DomainError):
            point_to_angles(SOUTH_POLE)


class TestCapsAndRotations:
    """Test cases for cap areas, angles and rotations."""

    @pytest.mark.parametrize(("alpha", "expected"), [(0.0, 0.0), (math.pi / 2, 0.5), (math.pi, 1.0)])
    def test_cap_area(self, alpha: float, expected: float) -> None:
        """Test the normalized cap area at the special angles."""
        assert cap_area(alpha) == pytest.approx(expected, abs=1e-15)

    def test_cap_area_domain(self) -> None:
        """Test that negative half-angles are rejected."""
        with pytest.raises(DomainError):
            cap_area(-0.1)

    def test_angle_between(self) -> None:
        """Test the central angle of antipodal and orthogonal points."""
        assert angle_between(NORTH_POLE, SOUTH_POLE) == pytest.approx(math.pi)
        assert angle_between(E_X, E_Y) == pytest.approx(math.pi / 2)
        assert angle_between(E_X, E_X) == 0.0

    def test_rotate_quarter_turn(self) -> None:
        """Test that a quarter turn about z takes x to y."""
        assert rotate(E_X, NORTH_POLE, math.pi / 2).array == pytest.approx(E_Y.array, abs=1e-15)

    def test_rotate_points_keeps_shape(self) -> None:
        """Test that rotating an array keeps its shape and norms."""
        points = great_circle(E_X, 32).samples
        rotated = rotate_points(points, np.array([0.0, 0.6, 0.8]), 1.3)
        assert rotated.shape == points.shape
        assert np.allclose(np.linalg.norm(rotated, axis=1), 1.0)

    def test_rotation_composition(self) -> None:
        """Test that rotating by θ₁ then θ₂ about one axis equals rotating by θ₁ + θ₂."""
        rng = np.random.default_rng(11)
        for _ in range(100):
            p = SpherePoint.from_array(rng.normal(size=3), normalize=True)
            axis = SpherePoint.from_array(rng.normal(size=3), normalize=True)
            theta_1, theta_2 = rng.uniform(-math.pi, math.pi, 2)
            composed = rotate(rotate(p, axis, theta_1), axis, theta_2)
            assert composed.array == pytest.approx(rotate(p, axis, theta_1 + theta_2).array, abs=1e-12)

    def test_axis_must_be_unit(self) -> None:
        """Test that a non-unit axis is rejected."""
        with pytest.raises(DomainError):
            rotate_points(E_X.array, np.array([0.0, 0.0, 2.0]), 1.0)

    def test_cap_boundary_domain(self) -> None:
        """Test that degenerate caps are rejected."""
        with pytest.raises(DomainError):
            cap_boundary(NORTH_POLE, 0.0)


class TestEnclosedArea:
    """Test cases for enclosed_area function."""

    def test_random_caps(self) -> None:
        """Test that 20 random cap boundaries enclose the cap area within 1e-6."""
        for center, alpha in _random_caps(seed=0, count=20):
            curve = cap_boundary(center, alpha, 512)
            assert enclosed_area(curve) == pytest.approx(cap_area(alpha), abs=1e-6)

    def test_reversal_gives_complement(self) -> None:
        """Test that reversing a curve gives the complementary area."""
        for center, alpha in _random_caps(seed=1, count=5):
            curve = cap_boundary(center, alpha, 512)
            assert enclosed_area(curve) + enclosed_area(curve.reversed()) == pytest.approx(1.0, abs=2e-6)

    def test_rotation_keeps_area(self) -> None:
        """Test that rotated cap boundaries enclose the same area."""
        rng = np.random.default_rng(5)
        checked = 0
        for center, alpha in _random_caps(seed=2, count=40):
            axis = SpherePoint.from_array(rng.normal(size=3), normalize=True)
            theta = float(rng.uniform(-math.pi, math.pi))
            polar = math.acos(rotate(center, axis, theta).z)
            if min(abs(polar - alpha), abs(math.pi - polar - alpha)) < 0.2:
                continue
            curve = cap_boundary(center, alpha, 512)
            assert enclosed_area(rotate_curve(curve, axis, theta)) == pytest.approx(enclosed_area(curve), abs=2e-6)
            checked += 1
        assert checked >= 10

    def test_great_circle_halves_sphere(self) -> None:
        """Test that a tilted great circle encloses half the sphere."""
        normal = SpherePoint.from_array((0.3, -0.4, 0.5), normalize=True)
        assert enclosed_area(great_circle(normal, 512)) == pytest.approx(0.5, abs=1e-6)

    def test_cap_around_north_pole(self) -> None:
        """Test a cap whose boundary winds around the chart axis."""
        assert enclosed_area(cap_boundary(NORTH_POLE, 0.4, 256)) == pytest.approx(cap_area(0.4), abs=1e-9)

    def test_self_intersecting(self) -> None:
        """Test that a figure-eight is rejected."""
        with pytest.raises(TopologyError):
            enclosed_area(_figure_eight())

    def test_plane_chart(self) -> None:
        """Test that plane curves carry no sphere area."""
        s = np.linspace(0.0, 2 * math.pi, 32, endpoint=False)
        curve = ClosedCurve(samples=np.column_stack([np.cos(s), np.sin(s)]), chart="plane")
        with pytest.raises(ChartError):
            enclosed_area(curve)

    def test_curve_through_pole(self) -> None:
        """Test that a curve through a chart pole is rejected."""
        with pytest.raises(ChartError):
            enclosed_area(great_circle(E_X, 512))
