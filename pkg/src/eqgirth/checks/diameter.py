"""Sampled Hofer-diameter bound of the pipe-equator embedding."""

import math
from collections.abc import Iterator

import numpy as np
import pandas as pd

from eqgirth.checks.base import BaseCheck, CheckResult
from eqgirth.checks.registry import register_check
from eqgirth.conf.global_settings import RunConfig
from eqgirth.girth_opt import embedding_point_bounds
from eqgirth.pipe_model import a_of_phi, area_S, b_of_theta, pipe_slack

CHART_SAMPLES = 1000


@register_check
class DiameterCheck(BaseCheck):
    """Area charts of the pipe equators and the diameter bound 1/3 + δ."""

    description = "Pipe-equator charts and the diameter bound 1/3 + slack"

    def __init__(self, config: RunConfig | None = None) -> None:
        super().__init__(config)
        self._frame: pd.DataFrame | None = None

    def _chart_results(self) -> Iterator[CheckResult]:
        delta, eps = self._config.delta, self._config.eps
        top = math.pi / 2 - eps
        yield CheckResult.compare("area_S_top", area_S(top, delta, eps), 0.0, "Area(S) vanishes at phi = pi/2 - eps")
        yield CheckResult.compare("area_S_zero", area_S(0.0, delta, eps), 0.25 - delta / 2, "Area(S) = 1/4 - delta/2 at phi = 0")
        yield CheckResult.compare("b_theta_zero", b_of_theta(0.0, delta), 0.5 - delta, "b(0) = 1/2 - delta")
        yield CheckResult.compare("b_theta_full_turn", b_of_theta(2 * math.pi, delta), 0.0, "b(2 pi) = 0")
        phis = np.linspace(0.0, top, CHART_SAMPLES)
        gap = max(abs(a_of_phi(float(p), delta, eps) - area_S(float(p), delta, eps)) for p in phis)
        yield CheckResult.compare("a_equals_area_S", gap, 0.0, "a(phi) coincides with Area(S) on [0, pi/2 - eps]", tolerance=1e-15)

    def _evaluate(self) -> Iterator[CheckResult]:
        config = self._config
        yield from self._chart_results()

        report, self._frame = embedding_point_bounds(
            config.delta,
            config.eps,
            config.grid_theta,
            config.grid_phi,
            config.pipe_slack_mode,
        )
        slack = pipe_slack(config.delta, config.pipe_slack_mode)
        yield CheckResult.at_most(
            "core_bound",
            report.core_bound,
            1 / 3 + slack,
            "On the pipe region every pair of pipe equators is within 1/3 + slack of each other",
            tolerance=1e-9,
        )
        if report.core_witness_bound is not None:
            yield CheckResult.compare(
                "core_witness_rescored",
                report.core_witness_bound,
                report.core_bound,
                "The core witness pair rescored from its pipe parameters gives the swept core bound",
                tolerance=1e-12,
            )
        yield CheckResult.at_most(
            "band_slack",
            report.band_slack,
            2 * config.eps,
            "The transition bands add at most 2 eps to the bound",
        )
        yield CheckResult.recorded(
            "max_bound",
            report.max_bound,
            "Largest pairwise bound over the sampled embedding",
        )

    def dumps(self) -> dict[str, pd.DataFrame]:
        """Worst bound of every sample point; evaluates the embedding if the check has not run."""
        if self._frame is None:
            config = self._config
            _, self._frame = embedding_point_bounds(
                config.delta, config.eps, config.grid_theta, config.grid_phi, config.pipe_slack_mode,
            )
        return {"diameter_point_bounds": self._frame}
