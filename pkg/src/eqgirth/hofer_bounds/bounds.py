"""Closed-form Hofer bounds for rotations and great circles.

A rotation by θ about an axis is generated by the height function along that
axis, whose oscillation on the unit-area sphere is 2θ/(4π). The energy-capacity
inequality bounds the displacement energy of a region below by its area.
"""

import math

from eqgirth.exceptions import DomainError
from eqgirth.hofer_bounds.schema import BoundReport
from eqgirth.sphere_geom import SpherePoint, angle_between


def rotation_hofer_bound(theta: float) -> BoundReport:
    """Upper bound on the Hofer norm of a rotation.

    Args:
        theta: Rotation angle in [0, π]; reduce larger angles by symmetry first.

    Returns:
        Upper bound θ/(2π).

    Raises:
        DomainError: If theta lies outside [0, π].

    Examples:
        >>> rotation_hofer_bound(math.pi).value
        0.5
    """
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"rotation angle {theta!r} outside [0, pi]")
    return BoundReport(
        kind="upper",
        value=theta / (2 * math.pi),
        source="rotation_norm",
        detail=f"rotation by {theta:.17g} rad",
    )


def great_circle_distance_upper(x: SpherePoint, y: SpherePoint) -> BoundReport:
    """Upper bound on the Hofer distance between the great circles i₀(x), i₀(y).

    The minimal rotation taking x to y also takes the positively oriented
    great circle perpendicular to x onto the one perpendicular to y.
    """
    return rotation_hofer_bound(min(angle_between(x, y), math.pi))


def displacement_energy_lower(area: float) -> BoundReport:
    """Energy-capacity lower bound for displacing a region of the given area.

    Raises:
        DomainError: If area lies outside [0, 1].
    """
    if not 0.0 <= area <= 1.0:
        raise DomainError(f"area {area!r} outside [0, 1]")
    return BoundReport(
        kind="lower",
        value=area,
        source="energy_capacity",
        detail=f"region of area {area:.17g}",
    )


def antipodal_bounds() -> tuple[BoundReport, BoundReport]:
    """Both sides of the equality diam(i₀) = 1/2.

    A Hamiltonian taking a great circle to its reverse displaces one of the two
    hemispheres, so its norm is at least 1/2; the rotation by π attains 1/2.

    Returns:
        The lower and the upper bound, both 1/2.
    """
    lower = displacement_energy_lower(0.5)
    upper = great_circle_distance_upper(SpherePoint(x=0.0, y=0.0, z=1.0), SpherePoint(x=0.0, y=0.0, z=-1.0))
    return (
        lower.model_copy(update={"source": "antipodal", "detail": "hemisphere displaced by the reversal"}),
        upper.model_copy(update={"source": "antipodal", "detail": "rotation by pi between antipodal great circles"}),
    )


def unoriented_diameter_bound() -> BoundReport:
    """Upper bound 1/4 on the diameter of the unoriented great-circle embedding.

    Unoriented great circles at any angle are related by a rotation of at most
    π/2.
    """
    bound = rotation_hofer_bound(math.pi / 2)
    return bound.model_copy(update={"source": "unoriented_rotation", "detail": "rotation by pi/2"})


def unoriented_lower_bound() -> BoundReport:
    """Lower bound 1/4 on the diameter of the unoriented great-circle embedding.

    Along a path from an equator to its reverse, the midpoint sits at Hofer
    distance at least half the antipodal lower bound from one of the two ends.
    """
    lower, _ = antipodal_bounds()
    return BoundReport(
        kind="lower",
        value=lower.value / 2,
        source="antipodal",
        detail="half of the antipodal lower bound",
    )


def naive_girth_bound() -> BoundReport:
    """Upper bound girth([i₀]) ≤ diam(i₀) = 1/2."""
    _, upper = antipodal_bounds()
    return upper.model_copy(update={"detail": "girth of the class is at most the diameter of i0"})
