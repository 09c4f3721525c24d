"""Hofer bounds package.

This package contains the closed-form Hofer-norm and Hofer-distance bounds:
rotation bounds, the energy-capacity lower bound, the antipodal equality for
great circles and the bounds for unoriented equators.
"""

from eqgirth.hofer_bounds.bounds import (
    antipodal_bounds,
    displacement_energy_lower,
    great_circle_distance_upper,
    naive_girth_bound,
    rotation_hofer_bound,
    unoriented_diameter_bound,
    unoriented_lower_bound,
)
from eqgirth.hofer_bounds.schema import BoundKind, BoundReport, BoundSource

__all__ = [
    "BoundKind",
    "BoundReport",
    "BoundSource",
    "rotation_hofer_bound",
    "great_circle_distance_upper",
    "displacement_energy_lower",
    "antipodal_bounds",
    "unoriented_diameter_bound",
    "unoriented_lower_bound",
    "naive_girth_bound",
]
