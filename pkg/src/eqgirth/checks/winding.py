"""Index of the rotation lift at its singular point."""

import math
from collections.abc import Iterator

import numpy as np
import pandas as pd

from eqgirth.checks.base import BaseCheck, CheckResult
from eqgirth.checks.registry import register_check
from eqgirth.topology_checks import chart_winding, evaluation_winding, lift_vectors, winding_loop_frame, winding_number_at_singularity

FRAME_SAMPLES = 10_000
INDEX = 2


@register_check
class WindingCheck(BaseCheck):
    """The lifted frame has index χ(S²) = 2 and the evaluation loop degree 2."""

    description = "Index 2 of the rotation lift and degree 2 of the evaluation loop"

    def _evaluate(self) -> Iterator[CheckResult]:
        config = self._config
        for radius in config.radii:
            result = chart_winding(radius, config.n_samples)
            yield CheckResult.compare(
                f"index_r{radius:g}",
                result.winding,
                INDEX,
                f"The lifted frame winds twice around the singular point on the loop of radius {radius:g}",
            )
            yield CheckResult.compare(
                f"index_residual_r{radius:g}",
                result.residual,
                0.0,
                "The accumulated angle is an integer multiple of 2 pi",
                tolerance=1e-3 * 2 * math.pi,
            )
            yield CheckResult.compare(
                f"evaluation_r{radius:g}",
                evaluation_winding(radius, config.n_samples),
                result.winding,
                "The evaluation loop on L0 has the same degree as the index",
            )

        radius = config.radii[0]
        yield CheckResult.compare(
            "reversed_index",
            winding_number_at_singularity(radius, config.n_samples, reverse=True),
            -INDEX,
            "Reversing the loop negates the winding number",
        )

        rng = np.random.default_rng(config.seed)
        points = rng.normal(size=(FRAME_SAMPLES, 3))
        points /= np.linalg.norm(points, axis=1)[:, None]
        points = points[points[:, 2] < 1.0 - 1e-6]
        vectors = lift_vectors(points)
        defect = max(
            float(np.max(np.abs(np.linalg.norm(vectors, axis=1) - 1.0))),
            float(np.max(np.abs(np.einsum("ij,ij->i", vectors, points)))),
        )
        yield CheckResult.compare(
            "frame_invariants",
            defect,
            0.0,
            f"The lifted frame is a unit tangent vector at {len(points)} random points",
            tolerance=1e-12,
        )

    def dumps(self) -> dict[str, pd.DataFrame]:
        """Unwrapped chart and evaluation angles along every loop."""
        return {"winding_loop": winding_loop_frame(self._config.radii, self._config.n_samples)}
