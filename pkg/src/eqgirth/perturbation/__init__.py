"""Perturbation package.

This package contains the graph perturbations of a great circle: their
intersections and lens areas, the resulting bound strictly below 1/2, and the
check that a graph is the time-1 image of the zero section under its
generating Hamiltonian.
"""

from eqgirth.perturbation.flow import graph_flow_check, symplectic_euler
from eqgirth.perturbation.lemma import (
    intersection_count,
    lemma1_bound,
    overlap_decomposition,
    overlap_quadrature,
    perturbed_embedding_bound,
    touching_frequencies,
)
from eqgirth.perturbation.schema import (
    GraphFlowReport,
    GraphPerturbation,
    Intersections,
    OverlapDecomposition,
    PerturbedEmbeddingReport,
)

__all__ = [
    "GraphPerturbation",
    "Intersections",
    "OverlapDecomposition",
    "GraphFlowReport",
    "PerturbedEmbeddingReport",
    "intersection_count",
    "overlap_decomposition",
    "overlap_quadrature",
    "lemma1_bound",
    "perturbed_embedding_bound",
    "touching_frequencies",
    "graph_flow_check",
    "symplectic_euler",
]
