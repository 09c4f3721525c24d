"""Certified maximum of the cost function F."""

from collections.abc import Iterator
from fractions import Fraction

import numpy as np
import pandas as pd

from eqgirth.checks.base import BaseCheck, CheckResult
from eqgirth.checks.registry import register_check
from eqgirth.girth_opt import argmax_family, diagonal_maximum, maximize_F
from eqgirth.girth_opt.optimize import diagonal_units
from eqgirth.pipe_model import f1, f2

X0 = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 6), Fraction(1, 6))
THIRD = Fraction(1, 3)
MAX_SLICE_POINTS = 601


def _divides(step: Fraction, value: Fraction) -> bool:
    return (value / step).denominator == 1


@register_check
class OptimizeCheck(BaseCheck):
    """Global maximum of F over [0, 1/2]⁴, its maximizers and its diagonal slice."""

    description = "max F = 1/3 over [0, 1/2]^4 and its maximizers"

    def _evaluate(self) -> Iterator[CheckResult]:
        step = self._config.resolution
        branches = (f1(X0), f2(X0))
        yield CheckResult(
            name="x0_branches",
            value=[str(v) for v in branches],
            expected=[str(THIRD), str(THIRD)],
            passed=branches == (THIRD, THIRD),
            claim="Both branches of F equal 1/3 at x0 = (1/3, 1/3, 1/6, 1/6), exactly in rational arithmetic",
        )

        result = maximize_F(step)
        yield CheckResult.compare(
            "max_F",
            result.max_value,
            1 / 3,
            "The maximum of F over [0, 1/2]^4 is 1/3, so the girth of the class of i0 is at most 1/3",
            tolerance=1e-12,
        )

        found = {q.as_tuple() for q in result.argmax_points}
        if _divides(step, Fraction(1, 6)):
            yield CheckResult.compare(
                "x0_is_argmax",
                tuple(float(c) for c in X0) in found,
                True,
                "x0 = (1/3, 1/3, 1/6, 1/6) is among the maximizers of F",
            )

        if _divides(step, Fraction(1, 12)):
            family = {tuple(float(c) for c in q) for q in argmax_family(step)}
            yield CheckResult(
                name="argmax_family",
                value=len(found),
                expected=len(family),
                passed=found == family,
                claim="The maximizers are exactly the points with m1 + m2 = 1/3, m1 in [1/12, 1/4], at extremal placements",
            )

        yield CheckResult.recorded(
            "canonical_argmax",
            list(result.canonical_argmax.as_tuple()),
            "Lexicographically smallest maximizer",
        )
        yield CheckResult.compare(
            "diagonal_slice_max",
            float(diagonal_maximum(step)),
            1 / 3,
            "On the slice a1 = b1, a2 = b2 the maximum of F is 1/3 up to the grid step",
            tolerance=float(step),
        )

    def dumps(self) -> dict[str, pd.DataFrame]:
        """F on the slice a1 = b1, a2 = b2 at the run resolution, coarsened to 1/1200 at most."""
        step = self._config.resolution
        if 1 / (2 * step) + 1 > MAX_SLICE_POINTS:
            step = Fraction(1, 2 * (MAX_SLICE_POINTS - 1))
        grid, values = diagonal_units(step)
        n = len(grid.units)
        return {
            "optimize_diagonal_slice": pd.DataFrame({
                "a": np.repeat(grid.units, n) / grid.denominator,
                "c": np.tile(grid.units, n) / grid.denominator,
                "F": values.ravel() / grid.denominator,
            }),
        }
