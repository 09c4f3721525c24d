"""Certified maximization of the cost function F over [0, 1/2]⁴.

The grid sweep runs in exact integer arithmetic: every grid value is an
integer multiple of 1/D for a common denominator D divisible by 4, so f1, f2
and F are integers in units of 1/D and ties are exact. Boxes of the grid are
discarded when a rigorous upper bound of F on the box falls below the best
value seen so far; the remaining boxes are evaluated exhaustively.

F is piecewise linear with kinks on the hyperplanes {c = 1/4}, {c = m}, {c = 1/2 − m}
and on the difference loci {a1 = a2}, {b1 = b2}. Refinement therefore maximizes
exactly along each coordinate line by enumerating those kinks and the crossings
of f1 and f2 in rational arithmetic.
"""

import logging
import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from eqgirth.conf.global_settings import parse_fraction
from eqgirth.exceptions import ConfigError
from eqgirth.girth_opt.schema import OptimizationResult
from eqgirth.girth_opt.sweep import map_blocks
from eqgirth.pipe_model import CostQuadruple, F, f1, f2

logger = logging.getLogger(__name__)

MIN_RESOLUTION = Fraction(1, 10_000)
MAX_RESOLUTION = Fraction(1, 10)
DEDUP_TOLERANCE = 1e-9
LEAF_POINTS = 4096
SEED_POINTS = 9
TOP_BLOCKS = 16
MAX_REFINE_ROUNDS = 64

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THIRD = Fraction(1, 3)

Box = tuple[tuple[int, int], ...]
RationalPoint = tuple[Fraction, Fraction, Fraction, Fraction]

# coordinate on the same equator / same coordinate on the other equator
_SAME_EQUATOR = (1, 0, 3, 2)
_OTHER_EQUATOR = (2, 3, 0, 1)


class UnitGrid(NamedTuple):
    """Grid values on [0, 1/2] as integers in units of 1/denominator."""

    step: Fraction
    denominator: int
    units: NDArray[np.int64]

    @property
    def half(self) -> int:
        return self.denominator // 2

    @property
    def quarter(self) -> int:
        return self.denominator // 4

    def value(self, index: int) -> Fraction:
        """Exact grid value at an index."""
        return Fraction(int(self.units[index]), self.denominator)


def check_resolution(resolution: Fraction | float | str) -> Fraction:
    """Parse a grid step and check it lies in [1e-4, 1e-1].

    Raises:
        ConfigError: If the step cannot be parsed or is out of range.
    """
    try:
        step = parse_fraction(resolution)
    except ValueError as e:
        raise ConfigError(str(e)) from e
    if not MIN_RESOLUTION <= step <= MAX_RESOLUTION:
        raise ConfigError(f"resolution {step} outside [1e-4, 1e-1]")
    return step


def unit_grid(resolution: Fraction | float | str) -> UnitGrid:
    """Integer grid k·step over [0, 1/2], closed off with 1/2 if needed.

    Examples:
        >>> grid = unit_grid("1/120")
        >>> len(grid.units), grid.denominator
        (61, 120)
    """
    step = check_resolution(resolution)
    denominator = math.lcm(step.denominator, 4)
    unit_step = step.numerator * (denominator // step.denominator)
    half = denominator // 2

    units = np.arange(half // unit_step + 1, dtype=np.int64) * unit_step
    if units[-1] != half:
        units = np.append(units, np.int64(half))
    return UnitGrid(step=step, denominator=denominator, units=units)


def evaluate_units(
    half: int,
    a1: NDArray[np.int64],
    b1: NDArray[np.int64],
    a2: NDArray[np.int64],
    b2: NDArray[np.int64],
) -> NDArray[np.int64]:
    """F on the outer product of four coordinate vectors, in integer units.

    Returns:
        Array of shape (len(a1), len(b1), len(a2), len(b2)).
    """
    a1 = a1[:, None, None, None]
    b1 = b1[None, :, None, None]
    a2 = a2[None, None, :, None]
    b2 = b2[None, None, None, :]

    m1 = np.minimum(np.minimum(a1, half - a1), np.minimum(b1, half - b1))
    m2 = np.minimum(np.minimum(a2, half - a2), np.minimum(b2, half - b2))
    return np.minimum(m1 + m2, np.abs(a1 - a2) + np.abs(b1 - b2))


def _evaluate_box(grid: UnitGrid, box: Box) -> NDArray[np.int64]:
    a1, b1, a2, b2 = (grid.units[lo:hi + 1] for lo, hi in box)
    return evaluate_units(grid.half, a1, b1, a2, b2)


def _tent_max(grid: UnitGrid, low: int, high: int) -> int:
    """Maximum of min(c, 1/2 − c) for c in [low, high]."""
    if low <= grid.quarter <= high:
        return grid.quarter
    return max(min(low, grid.half - low), min(high, grid.half - high))


def _upper_bound(grid: UnitGrid, box: Box) -> int:
    """Rigorous upper bound of F on a box, in units."""
    (a1l, a1h), (b1l, b1h), (a2l, a2h), (b2l, b2h) = (
        (int(grid.units[lo]), int(grid.units[hi])) for lo, hi in box
    )
    m1 = min(_tent_max(grid, a1l, a1h), _tent_max(grid, b1l, b1h))
    m2 = min(_tent_max(grid, a2l, a2h), _tent_max(grid, b2l, b2h))
    spread = max(a1h - a2l, a2h - a1l, 0) + max(b1h - b2l, b2h - b1l, 0)
    return min(m1 + m2, spread)


def _box_size(box: Box) -> int:
    return math.prod(hi - lo + 1 for lo, hi in box)


def _split(box: Box) -> tuple[Box, Box]:
    axis = max(range(len(box)), key=lambda k: box[k][1] - box[k][0])
    lo, hi = box[axis]
    mid = (lo + hi) // 2
    left = tuple((lo, mid) if k == axis else rng for k, rng in enumerate(box))
    right = tuple((mid + 1, hi) if k == axis else rng for k, rng in enumerate(box))
    return left, right


def _search(grid: UnitGrid, box: Box, seed: int) -> tuple[int, NDArray[np.int64]]:
    """Branch and bound over one block; returns its best value and all its maximizers."""
    best = seed
    hits: list[tuple[int, NDArray[np.int64]]] = []
    stack = [box]
    while stack:
        current = stack.pop()
        if _upper_bound(grid, current) < best:
            continue
        if _box_size(current) > LEAF_POINTS:
            left, right = _split(current)
            stack.append(right)
            stack.append(left)
            continue

        values = _evaluate_box(grid, current)
        top = int(values.max())
        if top < best:
            continue
        best = top
        offset = np.array([lo for lo, _ in current], dtype=np.int64)
        hits.append((top, np.argwhere(values == top) + offset))

    found = [idx for value, idx in hits if value == best]
    if not found:
        return best, np.empty((0, 4), dtype=np.int64)
    return best, np.concatenate(found)


def _seed(grid: UnitGrid) -> int:
    """Best value on a coarse sub-grid; a valid lower bound for pruning."""
    n = len(grid.units)
    stride = max(1, (n - 1) // (SEED_POINTS - 1))
    coarse = grid.units[::stride]
    return int(evaluate_units(grid.half, coarse, coarse, coarse, coarse).max())


def _line_candidates(q: RationalPoint, axis: int) -> list[Fraction]:
    """Kinks of F restricted to one coordinate line, including f1/f2 crossings."""
    same = q[_SAME_EQUATOR[axis]]
    cap = min(same, HALF - same)
    kinks = sorted({Fraction(0), HALF, QUARTER, cap, HALF - cap, q[_OTHER_EQUATOR[axis]]})

    def gap(t: Fraction) -> Fraction:
        moved = _with(q, axis, t)
        return f1(moved) - f2(moved)

    candidates = list(kinks)
    for u, v in zip(kinks, kinks[1:]):
        du, dv = gap(u), gap(v)
        if du * dv < 0:
            candidates.append(u + (v - u) * du / (du - dv))
    return candidates


def _with(q: RationalPoint, axis: int, value: Fraction) -> RationalPoint:
    coords = list(q)
    coords[axis] = value
    return (coords[0], coords[1], coords[2], coords[3])


def refine_point(q: RationalPoint) -> RationalPoint:
    """Coordinate-wise exact ascent of F from a starting point.

    Each step replaces one coordinate by the maximizer of F along its line;
    the point only moves on a strict improvement.

    Args:
        q: Starting point with rational coordinates.

    Returns:
        A point whose F value is maximal along all four coordinate lines.
    """
    current, value = q, F(q)
    for _ in range(MAX_REFINE_ROUNDS):
        improved = False
        for axis in range(4):
            for t in _line_candidates(current, axis):
                moved = _with(current, axis, t)
                if (moved_value := F(moved)) > value:
                    current, value, improved = moved, moved_value, True
        if not improved:
            break
    return current


def _dedup(points: list[RationalPoint]) -> list[RationalPoint]:
    ordered = sorted(set(points))
    kept: list[RationalPoint] = []
    for point in ordered:
        if kept and max(abs(float(x - y)) for x, y in zip(point, kept[-1])) <= DEDUP_TOLERANCE:
            continue
        kept.append(point)
    return kept


def _to_quadruple(q: RationalPoint) -> CostQuadruple:
    return CostQuadruple(a1=float(q[0]), b1=float(q[1]), a2=float(q[2]), b2=float(q[3]))


def grid_maximum(resolution: Fraction | float | str, threads: int | None = None) -> tuple[Fraction, list[RationalPoint]]:
    """Exact maximum of F on the grid and every grid maximizer.

    Args:
        resolution: Grid step in [1e-4, 1e-1].
        threads: Worker cap (defaults to the THREADS setting).

    Returns:
        The maximum and the maximizers in row-major (lexicographic) order.

    Raises:
        ConfigError: If the resolution is out of range.
    """
    grid = unit_grid(resolution)
    n = len(grid.units)
    seed = _seed(grid)

    edges = np.linspace(0, n, min(n, TOP_BLOCKS) + 1).astype(int)
    full = (0, n - 1)
    blocks: list[Box] = [
        ((int(lo), int(hi) - 1), full, full, full)
        for lo, hi in zip(edges[:-1], edges[1:])
        if hi > lo
    ]
    logger.info("sweeping %d^4 grid at step %s in %d blocks (seed %d/%d)", n, grid.step, len(blocks), seed, grid.denominator)

    results = map_blocks(lambda box: _search(grid, box, seed), blocks, threads)
    best = max(value for value, _ in results)
    indices = np.concatenate([idx for value, idx in results if value == best])
    indices = indices[np.lexsort(indices.T[::-1])]

    points = [
        (grid.value(i), grid.value(j), grid.value(k), grid.value(l))
        for i, j, k, l in indices.tolist()
    ]
    return Fraction(best, grid.denominator), points


def maximize_F(resolution: Fraction | float | str, refine: bool = True, threads: int | None = None) -> OptimizationResult:
    """Global maximum of F over [0, 1/2]⁴.

    Args:
        resolution: Grid step in [1e-4, 1e-1]; steps 1/(6k) put the sixths on the grid.
        refine: Refine every grid maximizer by exact coordinate-wise line search.
        threads: Worker cap (defaults to the THREADS setting).

    Returns:
        The maximum, all maximizers deduplicated at 1e-9 and the
        lexicographically smallest one.

    Raises:
        ConfigError: If the resolution is out of range.

    Examples:
        >>> result = maximize_F("1/120", refine=False)
        >>> result.max_value
        0.3333333333333333
    """
    step = check_resolution(resolution)
    max_value, points = grid_maximum(step, threads)
    logger.info("grid maximum %s attained at %d point(s)", max_value, len(points))

    if refine:
        refined = [refine_point(q) for q in points]
        values = [F(q) for q in refined]
        top = max(values)
        if top > max_value:
            logger.info("refinement raised the maximum from %s to %s", max_value, top)
        max_value = top
        points = [q for q, value in zip(refined, values) if value == top]

    points = _dedup(points)
    quadruples = [_to_quadruple(q) for q in points]
    return OptimizationResult(
        max_value=float(max_value),
        argmax_points=quadruples,
        grid_resolution=float(step),
        refined=refine,
        grid_points=len(unit_grid(step).units),
        canonical_argmax=quadruples[0],
    )


def argmax_family(step: Fraction | str = Fraction(1, 120)) -> list[RationalPoint]:
    """Maximizers of F with both single-equator costs on a grid of the given step.

    F attains 1/3 exactly when m1 + m2 = 1/3 and both side areas of each
    equator sit at an end of their admissible interval, placed opposite to
    the other equator's. With m1 = s and m2 = 1/3 − s, s ∈ [1/12, 1/4], every
    s contributes four points.

    Args:
        step: Spacing of s.

    Returns:
        The points in lexicographic order.
    """
    step = parse_fraction(step)
    points: set[RationalPoint] = set()
    s = Fraction(1, 12)
    while s <= QUARTER:
        t = THIRD - s
        pairs = ((HALF - s, t), (s, HALF - t))
        for a1, a2 in pairs:
            for b1, b2 in pairs:
                points.add((a1, b1, a2, b2))
        s += step
    return sorted(points)


def diagonal_units(resolution: Fraction | float | str) -> tuple[UnitGrid, NDArray[np.int64]]:
    """F on the slice a1 = b1, a2 = b2 in integer units.

    Returns:
        The grid and the matrix F(a, a, c, c) indexed by (a, c).
    """
    grid = unit_grid(resolution)
    a = grid.units[:, None]
    c = grid.units[None, :]
    m_a = np.minimum(a, grid.half - a)
    m_c = np.minimum(c, grid.half - c)
    return grid, np.minimum(m_a + m_c, 2 * np.abs(a - c))


def diagonal_maximum(resolution: Fraction | float | str, rows: int = 512) -> Fraction:
    """Exact maximum of F on the slice a1 = b1, a2 = b2, swept in row blocks."""
    grid = unit_grid(resolution)
    c = grid.units[None, :]
    m_c = np.minimum(c, grid.half - c)
    best = 0
    for start in range(0, len(grid.units), rows):
        a = grid.units[start:start + rows, None]
        m_a = np.minimum(a, grid.half - a)
        best = max(best, int(np.minimum(m_a + m_c, 2 * np.abs(a - c)).max()))
    return Fraction(best, grid.denominator)
