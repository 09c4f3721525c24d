"""Base check implementation for eqgirth.

This module defines the abstract base class of all verification checks. A
check turns the run configuration into a list of results and, optionally,
into named tables for CSV export.
"""

import logging
from abc import ABCMeta, abstractmethod
from collections.abc import Iterator

import pandas as pd

from eqgirth.checks.base.schema import CheckResult
from eqgirth.conf import settings
from eqgirth.conf.global_settings import RunConfig
from eqgirth.exceptions import ConfigError, EquatorGirthError
from eqgirth.utils.name import NameMixin, command_name

logger = logging.getLogger(__name__)


class BaseCheck(NameMixin, metaclass=ABCMeta):
    """Abstract base class for all verification checks.

    Subclasses implement ``_evaluate`` as a generator of results. An eqgirth
    error raised while evaluating ends the check with a failing result that
    carries the error message; the results yielded before it are kept. A
    ConfigError is not a check failure and propagates.

    Attributes:
        description: One-line summary shown by ``list-checks``.
        _config: The run configuration.
    """

    description: str = ""

    def __init__(self, config: RunConfig | None = None) -> None:
        """Initialize the check.

        Args:
            config: Run configuration (defaults to ``settings.RUN``).
        """
        self._config = config or settings.RUN

    def __call__(self) -> list[CheckResult]:
        """Evaluate the check.

        Returns:
            The results in evaluation order.
        """
        results: list[CheckResult] = []
        try:
            for result in self._evaluate():
                results.append(result)
        except ConfigError:
            raise
        except EquatorGirthError as e:
            logger.warning("check %s aborted: %s", self.command, e)
            results.append(CheckResult(
                name=f"{self.name}_error",
                passed=False,
                claim=self.description,
                error=f"{type(e).__name__}: {e}",
            ))
        return results

    @property
    def command(self) -> str:
        """The CLI subcommand of this check."""
        return command_name(self.__class__.__name__)

    @abstractmethod
    def _evaluate(self) -> Iterator[CheckResult]:
        """Compute the results of the check.

        Yields:
            One result per verified statement.
        """
        pass

    def dumps(self) -> dict[str, pd.DataFrame]:
        """Named tables for CSV export (none by default)."""
        return {}

    def run(self) -> list[CheckResult]:
        """Evaluate the check.

        Returns:
            The results in evaluation order.
        """
        return self()
