"""Tests for intersections and lens areas of graph perturbations."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from eqgirth.exceptions import DegeneracyError, DomainError
from eqgirth.perturbation import (
    GraphPerturbation,
    intersection_count,
    lemma1_bound,
    overlap_decomposition,
    overlap_quadrature,
    perturbed_embedding_bound,
    touching_frequencies,
)


def graph(frequency: int, amplitude: float = 0.05, phase: float = 0.0) -> GraphPerturbation:
    return GraphPerturbation(amplitude=amplitude, frequency=frequency, phase=phase)


class TestGraphPerturbation:
    """Test cases for GraphPerturbation model."""

    def test_primitive_is_periodic(self) -> None:
        """Test that an integer frequency gives a zero-mean graph."""
        f = graph(3, phase=0.4)
        assert float(f.primitive(2 * math.pi)) == pytest.approx(0.0, abs=1e-15)

    def test_derivative(self) -> None:
        """Test the derivative against a central difference."""
        f = graph(2, phase=0.1)
        h = 1e-6
        numeric = (float(f(1.0 + h)) - float(f(1.0 - h))) / (2 * h)
        assert float(f.derivative(1.0)) == pytest.approx(numeric, abs=1e-8)

    @pytest.mark.parametrize(("amplitude", "frequency"), [(0.2, 1), (-0.01, 1), (0.05, 0)])
    def test_invalid(self, amplitude: float, frequency: int) -> None:
        """Test the amplitude and frequency ranges."""
        with pytest.raises(ValidationError):
            GraphPerturbation(amplitude=amplitude, frequency=frequency)


class TestIntersectionCount:
    """Test cases for intersection_count function."""

    @pytest.mark.parametrize(("r", "s", "expected"), [(2, 3, 6), (1, 2, 4), (3, 5, 10), (1, 4, 8)])
    def test_count_is_twice_larger_frequency(self, r: int, s: int, expected: int) -> None:
        """Test that distinct frequencies meet 2·max(r, s) times."""
        count, params = intersection_count(graph(r), graph(s))
        assert count == expected
        assert len(params) == expected
        assert params == sorted(params)
        assert all(0.0 <= t < 2 * math.pi for t in params)

    def test_known_parameters(self) -> None:
        """Test the roots of sin 2t − sin t."""
        _, params = intersection_count(graph(1), graph(2))
        expected = [0.0, math.pi / 3, math.pi, 5 * math.pi / 3]
        assert params == pytest.approx(expected, abs=1e-11)

    def test_phase_shift(self) -> None:
        """Test that equal frequencies with different phases meet 2r times."""
        count, _ = intersection_count(graph(2), graph(2, phase=1.0))
        assert count == 4

    def test_against_unperturbed_circle(self) -> None:
        """Test that a graph meets the zero section at its 2r zeros."""
        count, _ = intersection_count(graph(3), graph(3, amplitude=0.0))
        assert count == 6

    @pytest.mark.parametrize("amplitude", [0.05, 0.0])
    def test_identical(self, amplitude: float) -> None:
        """Test that identical graphs raise DegeneracyError."""
        with pytest.raises(DegeneracyError) as excinfo:
            intersection_count(graph(2, amplitude), graph(2, amplitude))
        assert excinfo.value.t == 0.0

    @pytest.mark.parametrize(("r", "s"), [(3, 7), (7, 3), (1, 5), (3, 11)])
    def test_touching_pair(self, r: int, s: int) -> None:
        """Test that odd frequencies congruent mod 4 touch at π/2 or 3π/2 and raise DegeneracyError."""
        with pytest.raises(DegeneracyError) as excinfo:
            intersection_count(graph(r), graph(s))
        assert excinfo.value.t % math.pi == pytest.approx(math.pi / 2, abs=1e-6)


class TestOverlapDecomposition:
    """Test cases for overlap_decomposition and overlap_quadrature."""

    def test_signed_areas_cancel(self) -> None:
        """Test that the signed lens areas of zero-mean graphs sum to zero."""
        decomposition = overlap_decomposition(graph(2), graph(3))
        assert len(decomposition.component_signed_areas) == 6
        assert math.fsum(decomposition.component_signed_areas) == pytest.approx(0.0, abs=1e-12)

    def test_signs_alternate(self) -> None:
        """Test that consecutive lenses lie on opposite sides."""
        areas = overlap_decomposition(graph(1), graph(2)).component_signed_areas
        for a, b in zip(areas, areas[1:] + areas[:1]):
            assert a * b < 0

    @pytest.mark.parametrize(("r", "s"), [(2, 3), (1, 2), (5, 7)])
    def test_quadrature_agrees(self, r: int, s: int) -> None:
        """Test the exact lens areas against adaptive quadrature."""
        f, g = graph(r), graph(s)
        decomposition = overlap_decomposition(f, g)
        quadrature = overlap_quadrature(f, g, decomposition.intersection_params)
        assert decomposition.total_absolute_area == pytest.approx(quadrature, abs=1e-9)

    def test_single_lens_pair(self) -> None:
        """Test the two half-wave lenses against the zero section."""
        decomposition = overlap_decomposition(graph(1, amplitude=0.1), graph(1, amplitude=0.0))
        # ∫₀^π 0.1·sin t dt = 0.2
        assert decomposition.component_signed_areas == pytest.approx([0.2 / (4 * math.pi), -0.2 / (4 * math.pi)], abs=1e-12)
        assert decomposition.largest_component_area == pytest.approx(0.2 / (4 * math.pi), abs=1e-12)


class TestLemmaBound:
    """Test cases for lemma1_bound and perturbed_embedding_bound."""

    def test_strictly_below_half(self) -> None:
        """Test that transversal perturbations are strictly closer than 1/2."""
        bound = lemma1_bound(graph(2), graph(3))
        assert bound.kind == "upper"
        assert bound.value < 0.5 - 1e-4

    def test_symmetric(self) -> None:
        """Test that the bound does not depend on the order of the pair."""
        assert lemma1_bound(graph(2), graph(5)).value == pytest.approx(lemma1_bound(graph(5), graph(2)).value, abs=1e-14)

    def test_embedding(self) -> None:
        """Test the worst pair over the default three-chart embedding."""
        report = perturbed_embedding_bound()
        assert report.frequencies == (2, 3, 5)
        assert len(report.pair_bounds) == 6
        assert report.bound.value == max(report.pair_bounds.values())
        assert report.bound.value < 0.5 - 1e-4
        assert report.pair_bounds[f"{report.pair[0]},{report.pair[1]}"] == report.bound.value

    @pytest.mark.parametrize("frequencies", [(2, 3, 7), (2, 5, 3, 11), (1, 2, 5)])
    def test_touching_frequencies_rejected(self, frequencies: tuple[int, ...]) -> None:
        """Test that a frequency set with a touching pair raises DomainError before any root finding."""
        with pytest.raises(DomainError, match="touch"):
            perturbed_embedding_bound(frequencies)

    @pytest.mark.parametrize("frequencies", [(2,), (2, 3, 2)])
    def test_invalid_frequencies(self, frequencies: tuple[int, ...]) -> None:
        """Test that fewer than two or repeated frequencies raise DomainError."""
        with pytest.raises(DomainError):
            perturbed_embedding_bound(frequencies)

    @pytest.mark.parametrize("amplitude", [0.04, 0.01, 0.001])
    def test_doubling_amplitude_doubles_lens(self, amplitude: float) -> None:
        """Test that the largest lens area is linear in the common amplitude."""
        single = overlap_decomposition(graph(2, amplitude), graph(3, amplitude)).largest_component_area
        double = overlap_decomposition(graph(2, 2 * amplitude), graph(3, 2 * amplitude)).largest_component_area
        assert double == pytest.approx(2 * single, rel=1e-9)

    def test_bound_tends_to_half(self) -> None:
        """Test that the bound increases to 1/2 as the amplitude shrinks."""
        values = [lemma1_bound(graph(2, a), graph(5, a)).value for a in (0.08, 0.02, 0.005, 0.001)]
        assert values == sorted(values)
        assert all(v < 0.5 for v in values)
        assert 0.5 - values[-1] < 0.001


class TestTouchingFrequencies:
    """Test cases for touching_frequencies function."""

    @pytest.mark.parametrize(("r", "s", "expected"), [(3, 7, math.pi / 2), (1, 5, math.pi / 2), (1, 3, None), (3, 5, None), (2, 3, None), (2, 5, None)])
    def test_known_pairs(self, r: int, s: int, expected: float | None) -> None:
        """Test the touching point of a few small pairs."""
        assert touching_frequencies(r, s) == expected

    def test_agrees_with_root_finding(self) -> None:
        """Test the exact criterion against intersection_count on random small pairs."""
        rng = np.random.default_rng(7)
        for _ in range(20):
            r, s = (int(v) for v in rng.choice(np.arange(1, 12), size=2, replace=False))
            t = touching_frequencies(r, s)
            if t is None:
                assert intersection_count(graph(r), graph(s)).count == 2 * max(r, s)
            else:
                with pytest.raises(DegeneracyError):
                    intersection_count(graph(r), graph(s))
