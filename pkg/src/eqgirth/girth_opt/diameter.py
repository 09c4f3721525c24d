"""Sampled Hofer-diameter bound of the pipe-equator embedding.

The sphere is sampled on a cell-centred (θ, φ) grid. Points of the pipe region
|φ| ≤ π/2 − 2ε are pulled back to pipe parameters and every pair is scored
with F plus the pipe slack. Points in the bands |φ| > π/2 − 2ε map to curves
within ε of the boundary circle L₀, so a band point is scored against a pipe
point q by m(q) + slack + ε (deform q to L₀, then move by at most ε), and two
band points by 2ε.
"""

import logging
import math
from typing import NamedTuple

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from eqgirth.conf.global_settings import SlackMode
from eqgirth.exceptions import ConfigError
from eqgirth.girth_opt.schema import DiameterReport
from eqgirth.girth_opt.sweep import map_blocks
from eqgirth.pipe_model import (
    a_of_phi,
    b_of_theta,
    pair_distance_upper,
    pipe_params_at,
    pipe_slack,
    region_of,
    single_equator_cost_grid,
)
from eqgirth.sphere_geom import AngleCoords

logger = logging.getLogger(__name__)

MIN_GRID = 32
BLOCK_ROWS = 256
WITNESS_TOLERANCE = 1e-12


class EmbeddingGrid(NamedTuple):
    """Cell-centred samples of the embedding with their pipe parameters.

    Band samples carry NaN parameters.
    """

    theta: NDArray[np.float64]
    phi: NDArray[np.float64]
    region: NDArray[np.str_]
    a: NDArray[np.float64]
    b: NDArray[np.float64]
    cost: NDArray[np.float64]

    @property
    def pipe(self) -> NDArray[np.bool_]:
        return self.region == "pipe"


class _Sweep(NamedTuple):
    core_bound: float
    core_pair: tuple[int, int]
    band_bound: float
    band_pair: tuple[int, int]
    worst: NDArray[np.float64]


def embedding_grid(delta: float, eps: float, n_theta: int, n_phi: int) -> EmbeddingGrid:
    """Sample the embedding on a cell-centred grid, row-major in (φ, θ).

    Raises:
        ConfigError: If either grid size is below 32.
    """
    if n_theta < MIN_GRID or n_phi < MIN_GRID:
        raise ConfigError(f"embedding grid {n_theta}x{n_phi} is coarser than {MIN_GRID}x{MIN_GRID}")

    thetas = (np.arange(n_theta) + 0.5) * (2 * math.pi / n_theta)
    phis = -math.pi / 2 + (np.arange(n_phi) + 0.5) * (math.pi / n_phi)
    phi, theta = (grid.ravel() for grid in np.meshgrid(phis, thetas, indexing="ij"))

    region = np.array([region_of(float(p), eps) for p in phi])
    pipe = region == "pipe"
    a = np.full(phi.shape, np.nan)
    b = np.full(phi.shape, np.nan)
    a[pipe] = [a_of_phi(float(p), delta, eps) for p in phi[pipe]]
    b[pipe] = [b_of_theta(float(t), delta) for t in theta[pipe]]
    return EmbeddingGrid(theta=theta, phi=phi, region=region, a=a, b=b, cost=single_equator_cost_grid(a, b))


def _core_block(a: NDArray[np.float64], b: NDArray[np.float64], cost: NDArray[np.float64], rows: range) -> tuple[float, int, int, NDArray[np.float64]]:
    block = slice(rows.start, rows.stop)
    values = np.minimum(
        cost[block, None] + cost[None, :],
        np.abs(a[block, None] - a[None, :]) + np.abs(b[block, None] - b[None, :]),
    )
    flat = int(np.argmax(values))
    i, j = divmod(flat, values.shape[1])
    return float(values[i, j]), rows.start + i, j, values.max(axis=1)


def _sweep(grid: EmbeddingGrid, delta: float, eps: float, slack_mode: SlackMode, threads: int | None) -> _Sweep:
    slack = pipe_slack(delta, slack_mode)
    pipe_idx = np.flatnonzero(grid.pipe)
    band_idx = np.flatnonzero(~grid.pipe)
    a, b, cost = grid.a[pipe_idx], grid.b[pipe_idx], grid.cost[pipe_idx]

    blocks = [range(start, min(start + BLOCK_ROWS, len(pipe_idx))) for start in range(0, len(pipe_idx), BLOCK_ROWS)]
    results = map_blocks(lambda rows: _core_block(a, b, cost, rows), blocks, threads)

    core_value, core_pair = -math.inf, (0, 0)
    worst = np.zeros(len(grid.theta))
    for (value, i, j, row_max), rows in zip(results, blocks):
        if value > core_value:
            core_value, core_pair = value, (int(pipe_idx[i]), int(pipe_idx[j]))
        worst[pipe_idx[rows.start:rows.stop]] = row_max + slack

    band_value, band_pair = 0.0, (0, 0)
    if len(band_idx):
        first = int(band_idx[0])
        if len(pipe_idx):
            via_l0 = cost + slack + eps
            q = int(np.argmax(via_l0))
            band_value, band_pair = float(via_l0[q]), (first, int(pipe_idx[q]))
            worst[pipe_idx] = np.maximum(worst[pipe_idx], via_l0)
        if len(band_idx) > 1 and 2 * eps > band_value:
            band_value, band_pair = 2 * eps, (first, int(band_idx[-1]))
        worst[band_idx] = band_value

    return _Sweep(
        core_bound=core_value + slack if len(pipe_idx) else 0.0,
        core_pair=core_pair,
        band_bound=band_value,
        band_pair=band_pair,
        worst=worst,
    )


def _coords(grid: EmbeddingGrid, index: int) -> AngleCoords:
    return AngleCoords(theta=float(grid.theta[index]), phi=float(grid.phi[index]))


def _witness_bound(pair: tuple[AngleCoords, AngleCoords], delta: float, eps: float, slack_mode: SlackMode) -> float:
    """Recompute the bound of a core witness pair through its pipe parameters."""
    p1, p2 = (pipe_params_at(c.theta, c.phi, delta, eps) for c in pair)
    return pair_distance_upper(p1, p2, slack_mode).value


def _report(grid: EmbeddingGrid, sweep: _Sweep, delta: float, eps: float, n_theta: int, n_phi: int, slack_mode: SlackMode) -> DiameterReport:
    core_pair = (_coords(grid, sweep.core_pair[0]), _coords(grid, sweep.core_pair[1]))
    pipe_points = int(grid.pipe.sum())
    core_witness_bound = _witness_bound(core_pair, delta, eps, slack_mode) if pipe_points else None
    if core_witness_bound is not None and abs(core_witness_bound - sweep.core_bound) > WITNESS_TOLERANCE:
        logger.warning("core witness recomputes to %.17g against swept %.17g", core_witness_bound, sweep.core_bound)
    if sweep.band_bound > sweep.core_bound:
        max_bound = sweep.band_bound
        witness = (_coords(grid, sweep.band_pair[0]), _coords(grid, sweep.band_pair[1]))
    else:
        max_bound, witness = sweep.core_bound, core_pair
    return DiameterReport(
        max_bound=max_bound,
        witness_pair=witness,
        delta=delta,
        eps=eps,
        grid=(n_theta, n_phi),
        slack_mode=slack_mode,
        core_bound=sweep.core_bound,
        core_witness_pair=core_pair,
        core_witness_bound=core_witness_bound,
        band_bound=sweep.band_bound,
        band_slack=max(0.0, sweep.band_bound - sweep.core_bound),
        pipe_points=pipe_points,
        band_points=len(grid.theta) - pipe_points,
    )


def embedding_diameter_bound(
    delta: float,
    eps: float,
    n_theta: int,
    n_phi: int,
    slack_mode: SlackMode = "one_delta",
    threads: int | None = None,
) -> DiameterReport:
    """Largest pairwise Hofer-distance bound over a sampled embedding.

    Args:
        delta: Pipe area in (0, 0.1].
        eps: Transition band width in (0, π/8).
        n_theta: Samples in θ, at least 32.
        n_phi: Samples in φ, at least 32.
        slack_mode: Pipe slack convention.
        threads: Worker cap (defaults to the THREADS setting).

    Returns:
        The core bound over the pipe region, the band bound and the overall
        maximum, each with its witness pair.

    Raises:
        ConfigError: If the grid is coarser than 32x32.
        DomainError: If delta or eps is out of range.
    """
    grid = embedding_grid(delta, eps, n_theta, n_phi)
    sweep = _sweep(grid, delta, eps, slack_mode, threads)
    logger.info("core bound %.17g over %d pipe points, band bound %.17g", sweep.core_bound, int(grid.pipe.sum()), sweep.band_bound)
    return _report(grid, sweep, delta, eps, n_theta, n_phi, slack_mode)


def embedding_point_bounds(
    delta: float,
    eps: float,
    n_theta: int,
    n_phi: int,
    slack_mode: SlackMode = "one_delta",
    threads: int | None = None,
) -> tuple[DiameterReport, pd.DataFrame]:
    """Diameter report together with the worst bound of every sample point.

    Returns:
        The report and a frame with columns theta, phi, a, b, region and
        worst_bound in row-major (φ, θ) order.
    """
    grid = embedding_grid(delta, eps, n_theta, n_phi)
    sweep = _sweep(grid, delta, eps, slack_mode, threads)
    frame = pd.DataFrame({
        "theta": grid.theta,
        "phi": grid.phi,
        "a": grid.a,
        "b": grid.b,
        "region": grid.region,
        "worst_bound": sweep.worst,
    })
    return _report(grid, sweep, delta, eps, n_theta, n_phi, slack_mode), frame
