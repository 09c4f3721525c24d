"""Base check components package.

This package contains the abstract base class of the verification checks, the
report schema and the storage writer for reports and CSV dumps.
"""

from eqgirth.checks.base.check import BaseCheck
from eqgirth.checks.base.schema import CheckResult, Report
from eqgirth.checks.base.storage import ReportStorage

__all__ = [
    "BaseCheck",
    "CheckResult",
    "Report",
    "ReportStorage",
]
