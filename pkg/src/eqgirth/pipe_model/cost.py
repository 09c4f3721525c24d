"""Cost functions bounding the Hofer distance between two pipe equators.

Two pipe equators can be joined in two ways. The first deforms each of them
to the boundary circle of its chart, which costs the smallest of the four
side areas for each of the two equators (f1). The second moves the side areas
of one equator directly onto those of the other (f2). F is the cheaper of the
two.

The scalar functions accept floats or `fractions.Fraction` coordinates and
stay exact on rationals.
"""

from collections.abc import Sequence
from fractions import Fraction
from numbers import Real

import numpy as np
from numpy.typing import NDArray

from eqgirth.conf.global_settings import SlackMode
from eqgirth.exceptions import DomainError
from eqgirth.hofer_bounds.schema import BoundReport
from eqgirth.pipe_model.schema import CostQuadruple, PipeParams

HALF = Fraction(1, 2)

Quadruple = CostQuadruple | Sequence[Real]


def _coords(q: Quadruple) -> tuple[Real, Real, Real, Real]:
    if isinstance(q, CostQuadruple):
        return q.as_tuple()
    if len(q) != 4:
        raise DomainError(f"expected four coordinates, got {len(q)}")
    for value in q:
        if not 0 <= value <= HALF:
            raise DomainError(f"coordinate {value!r} outside [0, 1/2]")
    a1, b1, a2, b2 = q
    return a1, b1, a2, b2


def single_equator_cost(a: Real, b: Real) -> Real:
    """Cost min{a, 1/2 − a, b, 1/2 − b} of deforming one pipe equator to the boundary circle.

    Examples:
        >>> single_equator_cost(Fraction(1, 3), Fraction(1, 3))
        Fraction(1, 6)
    """
    return min(a, HALF - a, b, HALF - b)


def single_equator_cost_grid(a: NDArray[np.float64], b: NDArray[np.float64]) -> NDArray[np.float64]:
    """Vectorized `single_equator_cost` with numpy broadcasting."""
    return np.minimum(np.minimum(a, 0.5 - a), np.minimum(b, 0.5 - b))


def f1(q: Quadruple) -> Real:
    """First cost: both equators are deformed to the boundary circle.

    Args:
        q: The quadruple (a1, b1, a2, b2).

    Returns:
        min{a1, 1/2−a1, b1, 1/2−b1} + min{a2, 1/2−a2, b2, 1/2−b2}.

    Examples:
        >>> f1((Fraction(1, 3), Fraction(1, 3), Fraction(1, 6), Fraction(1, 6)))
        Fraction(1, 3)
    """
    a1, b1, a2, b2 = _coords(q)
    return single_equator_cost(a1, b1) + single_equator_cost(a2, b2)


def f2(q: Quadruple) -> Real:
    """Second cost: the side areas are moved onto each other, |a1 − a2| + |b1 − b2|.

    Examples:
        >>> f2((0.5, 0.5, 0.0, 0.0))
        1.0
    """
    a1, b1, a2, b2 = _coords(q)
    return abs(a1 - a2) + abs(b1 - b2)


def F(q: Quadruple) -> Real:
    """The cheaper of the two costs, min{f1, f2}.

    Examples:
        >>> F((Fraction(1, 3), Fraction(1, 3), Fraction(1, 6), Fraction(1, 6)))
        Fraction(1, 3)
    """
    return min(f1(q), f2(q))


def pipe_slack(delta: float, mode: SlackMode = "one_delta") -> float:
    """Energy slack for flowing the pipes themselves."""
    return delta if mode == "one_delta" else 2 * delta


def pair_distance_upper(p1: PipeParams, p2: PipeParams, slack_mode: SlackMode = "one_delta") -> BoundReport:
    """Upper bound on the Hofer distance between two pipe equators.

    Args:
        p1: The first pipe equator.
        p2: The second pipe equator, with the same pipe area.
        slack_mode: Add one pipe area (default) or two to F.

    Returns:
        Upper bound F(a1, b1, a2, b2) + slack.

    Raises:
        DomainError: If the pipe areas differ.
    """
    if p1.delta != p2.delta:
        raise DomainError(f"pipe areas differ: {p1.delta!r} != {p2.delta!r}")

    cost = float(F(CostQuadruple.from_params(p1, p2)))
    return BoundReport(
        kind="upper",
        value=cost + pipe_slack(p1.delta, slack_mode),
        source="cost_function",
        detail=f"F={cost:.17g} plus {slack_mode} slack",
    )
