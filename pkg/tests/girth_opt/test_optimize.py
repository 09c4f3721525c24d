"""Tests for the certified maximization of F."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from eqgirth.exceptions import ConfigError
from eqgirth.girth_opt import (
    OptimizationResult,
    argmax_family,
    diagonal_maximum,
    grid_maximum,
    maximize_F,
    refine_point,
)
from eqgirth.girth_opt.optimize import check_resolution, unit_grid
from eqgirth.pipe_model import F, CostQuadruple

THIRD = Fraction(1, 3)
X0 = (Fraction(1, 3), Fraction(1, 3), Fraction(1, 6), Fraction(1, 6))


class TestUnitGrid:
    """Test cases for the integer grid."""

    def test_twelfths_of_tenths(self) -> None:
        """Test that step 1/120 gives 61 points per axis."""
        grid = unit_grid("1/120")
        assert len(grid.units) == 61
        assert grid.denominator == 120
        assert grid.value(60) == Fraction(1, 2)

    def test_half_is_appended(self) -> None:
        """Test that 1/2 closes off a grid whose step does not divide it."""
        grid = unit_grid("1/7")
        assert [grid.value(i) for i in range(len(grid.units))] == [0, Fraction(1, 7), Fraction(2, 7), Fraction(3, 7), Fraction(1, 2)]

    @pytest.mark.parametrize("resolution", ["1/20000", "1/5", "a third"])
    def test_invalid_resolution(self, resolution: str) -> None:
        """Test that unusable steps raise ConfigError."""
        with pytest.raises(ConfigError):
            check_resolution(resolution)


class TestMaximizeF:
    """Test cases for maximize_F and grid_maximum."""

    def test_maximum_on_twelfths(self) -> None:
        """Test the exact grid maximum and maximizers at step 1/12."""
        value, points = grid_maximum("1/12")
        assert value == THIRD
        assert points == argmax_family("1/12")
        assert X0 in points

    def test_maximum_at_default_resolution(self) -> None:
        """Test that max F = 1/3 on the 61⁴ grid with all 84 maximizers."""
        result = maximize_F("1/120", refine=False)
        assert result.max_value == pytest.approx(1 / 3, abs=1e-12)
        assert result.grid_points == 61
        assert len(result.argmax_points) == 84
        family = [tuple(float(c) for c in q) for q in argmax_family("1/120")]
        assert [q.as_tuple() for q in result.argmax_points] == family
        assert tuple(float(c) for c in X0) in family

    def test_canonical_argmax(self) -> None:
        """Test that the lexicographically smallest maximizer is (1/12, 1/12, 1/4, 1/4)."""
        result = maximize_F("1/60")
        assert result.canonical_argmax.as_tuple() == (1 / 12, 1 / 12, 1 / 4, 1 / 4)
        assert result.refined

    def test_refinement_keeps_maximum(self) -> None:
        """Test that refinement cannot raise the maximum beyond 1/3 on an off-grid step."""
        result = maximize_F("1/70")
        grid_value, _ = grid_maximum("1/70")
        assert float(grid_value) <= result.max_value <= 1 / 3 + 1e-12

    def test_threads_do_not_change_result(self) -> None:
        """Test that the parallel sweep is deterministic."""
        assert grid_maximum("1/60", threads=1) == grid_maximum("1/60", threads=4)

    def test_result_validates_argmax(self) -> None:
        """Test that an argmax point with the wrong F value is rejected."""
        q = CostQuadruple(a1=0.0, b1=0.0, a2=0.0, b2=0.0)
        with pytest.raises(ValidationError):
            OptimizationResult(
                max_value=1 / 3,
                argmax_points=[q],
                grid_resolution=0.1,
                refined=False,
                grid_points=6,
                canonical_argmax=q,
            )


class TestRefinePoint:
    """Test cases for refine_point function."""

    def test_maximizer_is_fixed(self) -> None:
        """Test that a maximizer is not moved."""
        assert refine_point(X0) == X0

    def test_ascent(self) -> None:
        """Test that refinement never decreases F nor passes 1/3."""
        q = (Fraction(3, 10), Fraction(3, 10), Fraction(1, 5), Fraction(1, 5))
        refined = refine_point(q)
        assert F(refined) >= F(q)
        assert F(refined) <= THIRD


class TestArgmaxFamily:
    """Test cases for argmax_family function."""

    def test_every_member_attains_a_third(self) -> None:
        """Test that F = 1/3 exactly on the whole family."""
        family = argmax_family("1/120")
        assert len(family) == 84
        assert all(F(q) == THIRD for q in family)

    def test_sorted_and_unique(self) -> None:
        """Test that the family is returned in lexicographic order without repeats."""
        family = argmax_family("1/24")
        assert family == sorted(set(family))


class TestDiagonalSlice:
    """Test cases for diagonal_maximum function."""

    @pytest.mark.parametrize("resolution", ["1/120", "1/1200"])
    def test_exact_third(self, resolution: str) -> None:
        """Test that the slice maximum is exactly 1/3 when 1/12 is on the grid."""
        assert diagonal_maximum(resolution) == THIRD

    def test_fine_grid(self) -> None:
        """Test the slice maximum at the finest step."""
        assert float(diagonal_maximum(Fraction(1, 10_000))) == pytest.approx(1 / 3, abs=1e-4)
