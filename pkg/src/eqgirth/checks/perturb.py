"""Lens areas of perturbed great circles and the graph flow."""

from collections.abc import Iterator

import pandas as pd

from eqgirth.checks.base import BaseCheck, CheckResult
from eqgirth.checks.registry import register_check
from eqgirth.perturbation import (
    GraphPerturbation,
    graph_flow_check,
    intersection_count,
    lemma1_bound,
    overlap_decomposition,
    overlap_quadrature,
    perturbed_embedding_bound,
)
from eqgirth.perturbation.lemma import bracketing_grid

LENS_MARGIN = 1e-4


@register_check
class PerturbCheck(BaseCheck):
    """Two graphs of distinct frequencies over a great circle are closer than 1/2."""

    description = "Perturbed great circles: intersections, lenses, bound below 1/2"

    @property
    def graphs(self) -> tuple[GraphPerturbation, GraphPerturbation]:
        """The two perturbation graphs of the run."""
        config = self._config
        return (
            GraphPerturbation(amplitude=config.amplitude, frequency=config.r),
            GraphPerturbation(amplitude=config.amplitude, frequency=config.s),
        )

    def _evaluate(self) -> Iterator[CheckResult]:
        f, g = self.graphs
        count, params = intersection_count(f, g)
        yield CheckResult.compare(
            "intersections",
            count,
            2 * max(f.frequency, g.frequency),
            "sin(rt) and sin(st) meet r + s + |r - s| times on a full period",
        )

        decomposition = overlap_decomposition(f, g)
        yield CheckResult.compare(
            "lens_area_sum",
            sum(decomposition.component_signed_areas),
            0.0,
            "The signed lens areas of two zero-mean graphs sum to zero",
            tolerance=1e-9,
        )
        yield CheckResult.compare(
            "lens_area_quadrature",
            decomposition.total_absolute_area,
            overlap_quadrature(f, g, params),
            "Closed-form lens areas agree with adaptive quadrature of |f - g|",
            tolerance=1e-9,
        )

        bound = lemma1_bound(f, g)
        yield CheckResult.at_most(
            "lemma_bound",
            bound.value,
            0.5 - LENS_MARGIN,
            "Distinct transversal graphs over a great circle are at Hofer distance 1/2 minus the largest lens",
        )

        deviation = max(graph_flow_check(h, n_steps=self._config.flow_steps).max_deviation for h in (f, g))
        yield CheckResult.compare(
            "graph_flow",
            deviation,
            0.0,
            "The time-1 flow of H = integral of f maps the zero section onto the graph of f",
            tolerance=1e-10,
        )

        embedding = perturbed_embedding_bound(amplitude=self._config.amplitude)
        yield CheckResult.at_most(
            "perturbed_embedding",
            embedding.bound.value,
            0.5 - LENS_MARGIN,
            "Assigning distinct frequencies to the chart pairs gives an embedding of diameter below 1/2",
        )

    def dumps(self) -> dict[str, pd.DataFrame]:
        """Both graphs and their difference on the bracketing grid."""
        f, g = self.graphs
        t = bracketing_grid(f, g)
        return {"perturb_graphs": pd.DataFrame({"t": t, "f": f(t), "g": g(t), "difference": f(t) - g(t)})}
