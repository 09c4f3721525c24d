"""Grid adjudication of the inside/outside case split behind F ≤ 1/3.

The argument splits [0, 1/2]⁴ into the cube [1/6, 1/3]⁴, where the second
cost is small, and its complement, where the first cost is claimed to be
small. Each step is checked on a grid exactly as stated, with counterexamples
recorded in row-major order.
"""

import logging
import math
from fractions import Fraction

import numpy as np
from numpy.typing import NDArray

from eqgirth.exceptions import ConfigError
from eqgirth.girth_opt.schema import CaseSplitReport, ClaimStatus
from eqgirth.pipe_model import CostQuadruple

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5
MIN_POINTS = 7

SIXTH = Fraction(1, 6)
THIRD = Fraction(1, 3)


def _mesh(values: NDArray[np.int64]) -> tuple[NDArray[np.int64], ...]:
    return tuple(np.meshgrid(values, values, values, values, indexing="ij"))


def _single_cost(a: NDArray[np.int64], b: NDArray[np.int64], half: int) -> NDArray[np.int64]:
    return np.minimum(np.minimum(a, half - a), np.minimum(b, half - b))


def _status(
    name: str,
    statement: str,
    applies: NDArray[np.bool_],
    violated: NDArray[np.bool_],
    coords: tuple[NDArray[np.int64], ...],
    denominator: int,
) -> ClaimStatus:
    bad = np.argwhere(violated & applies)
    witnesses = [
        CostQuadruple(**{
            key: float(Fraction(int(coords[k][tuple(idx)]), denominator))
            for k, key in enumerate(("a1", "b1", "a2", "b2"))
        })
        for idx in bad[:MAX_COUNTEREXAMPLES]
    ]
    logger.info("claim %s: %d of %d grid points violate it", name, len(bad), int(applies.sum()))
    return ClaimStatus(
        name=name,
        statement=statement,
        holds=len(bad) == 0,
        checked=int(applies.sum()),
        counterexample_count=len(bad),
        counterexamples=witnesses,
    )


def verify_case_split(n_points: int = 31) -> CaseSplitReport:
    """Check every step of the case split on grids with ``n_points`` values per axis.

    Claims:
        inside_cube_f2: f2 ≤ 1/3 on the cube [1/6, 1/3]⁴.
        outside_cube_both_costs: m1 ≤ 1/6 and m2 ≤ 1/6 at every point outside the cube.
        outside_cube_some_cost: min(m1, m2) ≤ 1/6 at every point outside the cube.
        outside_cube_F: F ≤ 1/3 at every point outside the cube.

    Args:
        n_points: Grid values per axis, at least 7.

    Returns:
        The grid status of every claim.

    Raises:
        ConfigError: If n_points is below 7.
    """
    if n_points < MIN_POINTS:
        raise ConfigError(f"case-split grid needs at least {MIN_POINTS} points per axis, got {n_points}")

    # inside grid: 1/6 + k/(6(n-1)); outside grid: k/(2(n-1)); common units keep both exact
    denominator = math.lcm(6 * (n_points - 1), 2 * (n_points - 1), 4)
    half = denominator // 2
    sixth, third = denominator // 6, denominator // 3

    inside = sixth + np.arange(n_points, dtype=np.int64) * (denominator // (6 * (n_points - 1)))
    a1, b1, a2, b2 = _mesh(inside)
    f2 = np.abs(a1 - a2) + np.abs(b1 - b2)
    everywhere = np.ones(f2.shape, dtype=bool)
    claims = [
        _status(
            "inside_cube_f2",
            "f2 <= 1/3 on [1/6, 1/3]^4",
            everywhere,
            f2 > third,
            (a1, b1, a2, b2),
            denominator,
        )
    ]

    full = np.arange(n_points, dtype=np.int64) * (half // (n_points - 1))
    a1, b1, a2, b2 = _mesh(full)
    coords = (a1, b1, a2, b2)
    outside = np.zeros(a1.shape, dtype=bool)
    for c in coords:
        outside |= (c < sixth) | (c > third)

    m1 = _single_cost(a1, b1, half)
    m2 = _single_cost(a2, b2, half)
    cost = np.minimum(m1 + m2, np.abs(a1 - a2) + np.abs(b1 - b2))

    claims.extend([
        _status(
            "outside_cube_both_costs",
            "m1 <= 1/6 and m2 <= 1/6 outside [1/6, 1/3]^4",
            outside,
            (m1 > sixth) | (m2 > sixth),
            coords,
            denominator,
        ),
        _status(
            "outside_cube_some_cost",
            "min(m1, m2) <= 1/6 outside [1/6, 1/3]^4",
            outside,
            np.minimum(m1, m2) > sixth,
            coords,
            denominator,
        ),
        _status(
            "outside_cube_F",
            "F <= 1/3 outside [1/6, 1/3]^4",
            outside,
            cost > third,
            coords,
            denominator,
        ),
    ])
    return CaseSplitReport(grid_points=n_points, claims=claims)
