"""Sphere geometry package.

This package contains the normalized area geometry of the unit sphere: point
and curve models, the fan coordinates (θ, φ), caps, great circles, rotations
and the enclosed-area quadrature for oriented closed curves.
"""

from eqgirth.sphere_geom.geometry import (
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
from eqgirth.sphere_geom.schema import NORTH_POLE, SOUTH_POLE, AngleCoords, ClosedCurve, SpherePoint

__all__ = [
    "SpherePoint",
    "AngleCoords",
    "ClosedCurve",
    "NORTH_POLE",
    "SOUTH_POLE",
    "angles_to_point",
    "point_to_angles",
    "cap_area",
    "cap_boundary",
    "great_circle",
    "enclosed_area",
    "angle_between",
    "rotate",
    "rotate_points",
    "rotate_curve",
]
