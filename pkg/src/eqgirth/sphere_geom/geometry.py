"""Coordinates, caps, rotations and enclosed-area quadrature on the unit sphere.

Areas are normalized so the whole sphere has area 1. Enclosed areas are
computed with the shoelace formula in Lambert cylindrical equal-area
coordinates (θ, z), where the area element is dθ·dz/(4π).
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from eqgirth.exceptions import ChartError, DomainError, TopologyError
from eqgirth.sphere_geom.schema import AngleCoords, ClosedCurve, SpherePoint

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 512
PHI_MARGIN = 1e-9
AXIS_TOLERANCE = 1e-9
CHART_POLE_DISTANCE = 1e-6

_BLOCK = 256


def angles_to_point(c: AngleCoords) -> SpherePoint:
    """Map fan coordinates to a point on the sphere.

    The circle C_φ is the intersection of the sphere with the plane through the
    south pole q that contains the x-direction and makes angle φ with the
    xz-plane. Along C_φ the point moves from q (θ = 0) through the far side of
    the circle (θ = π) back to q.

    Args:
        c: The fan coordinates.

    Returns:
        The point on C_φ at angle θ.

    Raises:
        DomainError: If |φ| ≥ π/2 − 1e-9, where the circle degenerates to q.

    Examples:
        >>> angles_to_point(AngleCoords(theta=math.pi, phi=0.0))
        SpherePoint(x=1.2246467991473532e-16, y=0.0, z=1.0)
    """
    if abs(c.phi) >= math.pi / 2 - PHI_MARGIN:
        raise DomainError(f"phi={c.phi!r} too close to ±pi/2, the circle degenerates to the south pole")

    sin_phi, cos_phi = math.sin(c.phi), math.cos(c.phi)
    center = sin_phi * np.array([0.0, cos_phi, -sin_phi])
    w = np.array([0.0, sin_phi, cos_phi])
    e_x = np.array([1.0, 0.0, 0.0])

    point = center + cos_phi * (-math.cos(c.theta) * w + math.sin(c.theta) * e_x)
    return SpherePoint.from_array(point, normalize=True)


def point_to_angles(p: SpherePoint) -> AngleCoords:
    """Inverse of `angles_to_point` away from the south pole.

    Args:
        p: A point other than the south pole.

    Returns:
        Its fan coordinates.

    Raises:
        DomainError: If p is (numerically) the south pole.
    """
    if p.z + 1.0 < 1e-12:
        raise DomainError("the south pole has no fan coordinates")

    phi = math.atan2(p.y, p.z + 1.0)
    sin_phi, cos_phi = math.sin(phi), math.cos(phi)
    center = sin_phi * np.array([0.0, cos_phi, -sin_phi])
    w = np.array([0.0, sin_phi, cos_phi])

    rel = p.array - center
    theta = math.atan2(p.x, -float(rel @ w))
    return AngleCoords(theta=theta, phi=phi)


def cap_area(alpha: float) -> float:
    """Normalized area of a spherical cap.

    Args:
        alpha: Half-angle of the cap in radians, in [0, π].

    Returns:
        (1 − cos α)/2.

    Raises:
        DomainError: If alpha lies outside [0, π].
    """
    if not 0.0 <= alpha <= math.pi:
        raise DomainError(f"cap half-angle {alpha!r} outside [0, pi]")
    return (1.0 - math.cos(alpha)) / 2.0


def angle_between(x: SpherePoint, y: SpherePoint) -> float:
    """Angle in [0, π] between two points seen from the center."""
    # atan2 keeps full precision for nearly parallel and nearly antipodal pairs
    a, b = x.array, y.array
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(a @ b))


def _check_axis(axis: SpherePoint | NDArray[np.float64]) -> NDArray[np.float64]:
    u = axis.array if isinstance(axis, SpherePoint) else np.asarray(axis, dtype=np.float64)
    norm = float(np.linalg.norm(u))
    if abs(norm - 1.0) > AXIS_TOLERANCE:
        raise DomainError(f"rotation axis has norm {norm!r}, expected 1")
    return u


def rotate_points(points: NDArray[np.float64], axis: SpherePoint | NDArray[np.float64], theta: float) -> NDArray[np.float64]:
    """Rodrigues rotation of an array of vectors.

    Args:
        points: Array of shape (n, 3) (or a single 3-vector).
        axis: Unit rotation axis.
        theta: Counterclockwise angle about the axis.

    Returns:
        The rotated vectors, same shape as the input.

    Raises:
        DomainError: If the axis is not unit within 1e-9.
    """
    u = _check_axis(axis)
    v = np.asarray(points, dtype=np.float64)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    return v * cos_t + np.cross(u, v) * sin_t + np.outer(v @ u, u).reshape(v.shape) * (1.0 - cos_t)


def rotate(p: SpherePoint, axis: SpherePoint, theta: float) -> SpherePoint:
    """Rotate a point counterclockwise about an axis.

    Args:
        p: The point.
        axis: Unit rotation axis.
        theta: Rotation angle in radians.

    Returns:
        The rotated point.

    Raises:
        DomainError: If the axis is not unit within 1e-9.
    """
    return SpherePoint.from_array(rotate_points(p.array, axis, theta), normalize=True)


def rotate_curve(curve: ClosedCurve, axis: SpherePoint, theta: float) -> ClosedCurve:
    """Apply a rotation to every sample of a sphere curve."""
    return ClosedCurve(samples=rotate_points(curve.to_sphere().samples, axis, theta))


def _tangent_frame(center: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    helper = np.array([1.0, 0.0, 0.0]) if abs(center[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = np.cross(helper, center)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(center, e1)
    return e1, e2


def cap_boundary(center: SpherePoint, alpha: float, n_samples: int = DEFAULT_SAMPLES) -> ClosedCurve:
    """Boundary circle of a cap, oriented so that the cap lies on its left.

    Args:
        center: Center of the cap.
        alpha: Half-angle in (0, π).
        n_samples: Number of samples.

    Returns:
        The sampled boundary.

    Raises:
        DomainError: If alpha is not strictly inside (0, π).
    """
    if not 0.0 < alpha < math.pi:
        raise DomainError(f"cap half-angle {alpha!r} outside (0, pi)")

    c = center.array
    e1, e2 = _tangent_frame(c)
    s = np.linspace(0.0, 2 * np.pi, n_samples, endpoint=False)
    ring = np.outer(np.cos(s), e1) + np.outer(np.sin(s), e2)
    return ClosedCurve(samples=math.cos(alpha) * c + math.sin(alpha) * ring)


def great_circle(normal: SpherePoint, n_samples: int = DEFAULT_SAMPLES) -> ClosedCurve:
    """The positively oriented great circle perpendicular to a point.

    The hemisphere containing ``normal`` lies on the left of the curve.
    """
    return cap_boundary(normal, math.pi / 2, n_samples)


def _lambert_coordinates(samples: NDArray[np.float64]) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    pole_distance = np.sqrt(samples[:, 0] ** 2 + samples[:, 1] ** 2 + (1.0 - np.abs(samples[:, 2])) ** 2)
    if np.min(pole_distance) < CHART_POLE_DISTANCE:
        raise ChartError("curve passes within 1e-6 of a chart pole; re-chart it (e.g. rotate) first")
    return np.arctan2(samples[:, 1], samples[:, 0]), samples[:, 2]


def _shoelace(theta: NDArray[np.float64], z: NDArray[np.float64]) -> float:
    """Signed ∮(1 − z) dθ of the chart polygon, with seam unwrapping."""
    d_theta = np.roll(theta, -1) - theta
    # minimal-angle continuation across the θ = ±π seam
    d_theta = (d_theta + np.pi) % (2 * np.pi) - np.pi
    if np.max(np.abs(d_theta)) > np.pi - CHART_POLE_DISTANCE:
        raise ChartError("an edge passes over a chart pole; re-chart the curve first")
    z_mid = 0.5 * (z + np.roll(z, -1))
    return float(np.sum((1.0 - z_mid) * d_theta))


def _on_arc(
    p: NDArray[np.float64], u: NDArray[np.float64], v: NDArray[np.float64], normal: NDArray[np.float64]
) -> NDArray[np.bool_]:
    """Whether directions p lie on the minor arcs from u to v."""
    after_u = np.einsum("...k,...k", np.cross(u, p), normal) >= 0
    before_v = np.einsum("...k,...k", np.cross(p, v), normal) >= 0
    return after_u & before_v


def _arcs_intersect(samples: NDArray[np.float64]) -> bool:
    """Whether two non-adjacent great-circle edges of the polygon cross."""
    a = samples
    b = np.roll(samples, -1, axis=0)
    normals = np.cross(a, b)
    normal_len = np.linalg.norm(normals, axis=1)
    n = len(samples)
    idx = np.arange(n)

    for start in range(0, n, _BLOCK):
        rows = idx[start:start + _BLOCK]
        # edges i and j can only meet along ±(n_i × n_j)
        lines = np.cross(normals[rows, None, :], normals[None, :, :])
        norm = np.linalg.norm(lines, axis=2)
        transversal = norm > 1e-9 * normal_len[rows, None] * normal_len[None, :]
        with np.errstate(invalid="ignore", divide="ignore"):
            lines = lines / norm[..., None]

        gap = np.abs(rows[:, None] - idx[None, :])
        candidates = transversal & (gap > 1) & (gap != n - 1)

        for sign in (1.0, -1.0):
            p = sign * lines
            on_i = _on_arc(p, a[rows, None, :], b[rows, None, :], normals[rows, None, :])
            on_j = _on_arc(p, a[None, :, :], b[None, :, :], normals[None, :, :])
            if np.any(on_i & on_j & candidates):
                return True
    return False


def enclosed_area(curve: ClosedCurve, check_simple: bool = True) -> float:
    """Normalized area of the region to the left of an oriented closed curve.

    The signed integral ∮(1 − z) dθ / (4π) is evaluated on the sample polygon
    in Lambert coordinates (θ, z); one Richardson step against the polygon of
    every other sample removes the leading discretization error. A curve that
    winds once around the z-axis counterclockwise has the northern side on its
    left, so the integral is already the left area; a negative value means the
    left region is the complement and 1 is added.

    Args:
        curve: A simple closed curve in the sphere or lambert chart.
        check_simple: Check the sample polygon for self-intersections.

    Returns:
        The left area in [0, 1].

    Raises:
        ChartError: If the curve passes within 1e-6 of a pole of the chart.
        TopologyError: If the sample polygon self-intersects.
    """
    if curve.chart == "plane":
        raise ChartError("plane curves carry no sphere area; use a sphere or lambert curve")

    samples = curve.to_sphere().samples
    theta, z = _lambert_coordinates(samples)

    if check_simple and _arcs_intersect(samples):
        raise TopologyError("sample polygon of the curve self-intersects")

    fine = _shoelace(theta, z)
    if len(samples) % 2 == 0 and len(samples) >= 32:
        coarse = _shoelace(theta[::2], z[::2])
        integral = (4.0 * fine - coarse) / 3.0
    else:
        integral = fine

    area = integral / (4 * np.pi)
    if area < 0.0:
        area += 1.0
    logger.debug("enclosed area %.15f from %d samples", area, len(samples))
    return float(min(max(area, 0.0), 1.0))
