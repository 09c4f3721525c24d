"""Topology checks package.

This package contains the rotation lift of the great-circle embedding, its
unit tangent frame, and the two winding numbers around its singular point: the
index of the frame and the degree of the evaluation loop on L₀.
"""

from eqgirth.topology_checks.index import (
    chart_winding,
    evaluation_loop,
    evaluation_winding,
    lift_frame,
    lift_vectors,
    winding_loop_frame,
    winding_number_at_singularity,
)
from eqgirth.topology_checks.schema import FrameSample, WindingResult

__all__ = [
    "FrameSample",
    "WindingResult",
    "lift_frame",
    "lift_vectors",
    "chart_winding",
    "winding_number_at_singularity",
    "evaluation_loop",
    "evaluation_winding",
    "winding_loop_frame",
]
