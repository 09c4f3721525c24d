"""Girth optimization package.

This package certifies the maximum of the cost function F over [0, 1/2]⁴,
adjudicates the case split of the argument bounding it and computes the
sampled Hofer-diameter bound of the pipe-equator embedding.
"""

from eqgirth.girth_opt.case_split import verify_case_split
from eqgirth.girth_opt.diameter import embedding_diameter_bound, embedding_point_bounds
from eqgirth.girth_opt.optimize import argmax_family, diagonal_maximum, grid_maximum, maximize_F, refine_point
from eqgirth.girth_opt.schema import CaseSplitReport, ClaimStatus, DiameterReport, OptimizationResult

__all__ = [
    "OptimizationResult",
    "CaseSplitReport",
    "ClaimStatus",
    "DiameterReport",
    "maximize_F",
    "grid_maximum",
    "refine_point",
    "argmax_family",
    "diagonal_maximum",
    "verify_case_split",
    "embedding_diameter_bound",
    "embedding_point_bounds",
]
