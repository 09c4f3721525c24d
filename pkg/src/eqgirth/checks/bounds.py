"""Elementary Hofer bounds and area quadrature calibration."""

import math
from collections.abc import Iterator

import numpy as np

from eqgirth.checks.base import BaseCheck, CheckResult
from eqgirth.checks.registry import register_check
from eqgirth.hofer_bounds import (
    antipodal_bounds,
    naive_girth_bound,
    rotation_hofer_bound,
    unoriented_diameter_bound,
    unoriented_lower_bound,
)
from eqgirth.sphere_geom import SpherePoint, cap_area, cap_boundary, enclosed_area

CALIBRATION_CAPS = 20
CALIBRATION_SAMPLES = 512
POLE_CLEARANCE = 0.2


def random_caps(seed: int, count: int = CALIBRATION_CAPS) -> list[tuple[SpherePoint, float]]:
    """Random caps whose boundaries stay at least 0.2 rad away from both poles.

    The Lambert chart of the quadrature is singular at the poles, so caps
    whose boundary passes close to one are redrawn.
    """
    rng = np.random.default_rng(seed)
    caps: list[tuple[SpherePoint, float]] = []
    while len(caps) < count:
        center = SpherePoint.from_array(rng.normal(size=3), normalize=True)
        alpha = float(rng.uniform(0.1, math.pi - 0.1))
        polar = math.acos(max(-1.0, min(1.0, center.z)))
        # distances of the boundary circle to the north and south pole
        if min(abs(polar - alpha), abs(math.pi - polar - alpha)) < POLE_CLEARANCE:
            continue
        caps.append((center, alpha))
    return caps


@register_check
class BoundsCheck(BaseCheck):
    """Rotation, antipodal and unoriented bounds, and the quadrature calibration."""

    description = "Elementary Hofer bounds and cap-area calibration"

    def _evaluate(self) -> Iterator[CheckResult]:
        yield CheckResult.compare(
            "rotation_pi",
            rotation_hofer_bound(math.pi).value,
            0.5,
            "A rotation by pi has Hofer norm at most 1/2",
        )

        lower, upper = antipodal_bounds()
        yield CheckResult.compare(
            "antipodal_lower",
            lower.value,
            0.5,
            "Taking a great circle to its reverse displaces a hemisphere, so costs at least 1/2",
        )
        yield CheckResult.compare(
            "antipodal_upper",
            upper.value,
            0.5,
            "The rotation by pi takes a great circle to its reverse, so diam(i0) = 1/2",
        )
        yield CheckResult.compare(
            "naive_girth",
            naive_girth_bound().value,
            0.5,
            "The girth of the class of i0 is at most diam(i0) = 1/2",
        )
        yield CheckResult.compare(
            "unoriented_upper",
            unoriented_diameter_bound().value,
            0.25,
            "Unoriented great circles are related by rotations of at most pi/2",
        )
        yield CheckResult.compare(
            "unoriented_lower",
            unoriented_lower_bound().value,
            0.25,
            "The unoriented diameter is at least half the antipodal lower bound, so equals 1/4",
        )

        errors, complements = [], []
        for center, alpha in random_caps(self._config.seed):
            curve = cap_boundary(center, alpha, CALIBRATION_SAMPLES)
            area = enclosed_area(curve)
            errors.append(abs(area - cap_area(alpha)))
            complements.append(abs(area + enclosed_area(curve.reversed()) - 1.0))
        yield CheckResult.compare(
            "cap_area_calibration",
            max(errors),
            0.0,
            f"Enclosed area of {CALIBRATION_CAPS} random cap boundaries matches the cap area",
            tolerance=1e-6,
        )
        yield CheckResult.compare(
            "reversal_complement",
            max(complements),
            0.0,
            "Reversing a curve replaces its enclosed area by the complement",
            tolerance=2e-6,
        )
