"""eqgirth checks package.

This package contains the verification checks behind the CLI subcommands.
Importing it registers every check with the global registry; the ``all``
subcommand runs them in registration order.
"""

from eqgirth.checks.bounds import BoundsCheck
from eqgirth.checks.case_split import CaseSplitCheck
from eqgirth.checks.diameter import DiameterCheck
from eqgirth.checks.optimize import OptimizeCheck
from eqgirth.checks.perturb import PerturbCheck
from eqgirth.checks.winding import WindingCheck

__all__ = [
    "BoundsCheck",
    "CaseSplitCheck",
    "DiameterCheck",
    "OptimizeCheck",
    "PerturbCheck",
    "WindingCheck",
]
