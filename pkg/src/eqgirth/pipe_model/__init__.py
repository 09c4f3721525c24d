"""Pipe equator model package.

This package contains the parameter model of pipe equators: the area charts
a(φ) and b(θ), the planar region bookkeeping and the cost functions f1, f2 and
F that bound the Hofer distance between two pipe equators.
"""

from eqgirth.pipe_model.charts import a_of_phi, area_S, b_of_theta, pipe_params_at, planar_regions, region_of
from eqgirth.pipe_model.cost import (
    F,
    f1,
    f2,
    pair_distance_upper,
    pipe_slack,
    single_equator_cost,
    single_equator_cost_grid,
)
from eqgirth.pipe_model.schema import CostQuadruple, PipeParams, PlanarRegions, Region

__all__ = [
    "PipeParams",
    "PlanarRegions",
    "CostQuadruple",
    "Region",
    "area_S",
    "a_of_phi",
    "b_of_theta",
    "region_of",
    "pipe_params_at",
    "planar_regions",
    "single_equator_cost",
    "single_equator_cost_grid",
    "f1",
    "f2",
    "F",
    "pipe_slack",
    "pair_distance_upper",
]
