"""Intersections and lens areas of two perturbed great circles.

Two graphs f, g over the same great circle cut the annulus chart into lenses.
A Hamiltonian that moves the larger half-disc of one onto the other only has
to pay 1/2 minus the largest lens, which gives a distance strictly below 1/2.
"""

import logging
import math
from collections.abc import Sequence
from itertools import combinations, permutations

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq, minimize_scalar

from eqgirth.exceptions import DegeneracyError, DomainError
from eqgirth.hofer_bounds import BoundReport
from eqgirth.perturbation.schema import (
    AREA_SCALE,
    GraphPerturbation,
    Intersections,
    OverlapDecomposition,
    PerturbedEmbeddingReport,
)

logger = logging.getLogger(__name__)

SAMPLES_PER_FREQUENCY = 10 * 64
ROOT_TOLERANCE = 1e-12
TRANSVERSALITY = 1e-8
TANGENCY = 1e-10
IDENTICAL = 1e-14

TWO_PI = 2 * math.pi


def bracketing_grid(f: GraphPerturbation, g: GraphPerturbation, n_grid: int | None = None) -> np.ndarray:
    """Uniform grid on [0, 2π) used to bracket the intersections.

    The difference f − g is a trigonometric polynomial of degree max(r, s), so
    consecutive roots of a transversal pair are at least of order π/(r + s)
    apart; 640 samples per unit of r + s leave hundreds of nodes per root gap.
    """
    n = n_grid or SAMPLES_PER_FREQUENCY * (f.frequency + g.frequency)
    return np.linspace(0.0, TWO_PI, n, endpoint=False)


def _difference(f: GraphPerturbation, g: GraphPerturbation):
    def d(t: float) -> float:
        return float(f(t) - g(t))
    return d


def _check_tangencies(f: GraphPerturbation, g: GraphPerturbation, nodes: np.ndarray, values: np.ndarray) -> None:
    """Look for double roots inside cells without a sign change."""
    slopes = f.derivative(nodes) - g.derivative(nodes)
    next_values, next_slopes = np.roll(values, -1), np.roll(slopes, -1)
    cells = np.flatnonzero((values * next_values > 0) & (slopes * next_slopes < 0))
    d = _difference(f, g)
    for k in cells:
        lo = float(nodes[k])
        hi = lo + TWO_PI / len(nodes)
        sign = math.copysign(1.0, float(values[k]))
        extremum = minimize_scalar(lambda t: sign * d(t), bounds=(lo, hi), method="bounded", options={"xatol": 1e-13})
        if abs(d(extremum.x)) < TANGENCY:
            raise DegeneracyError("graphs touch without crossing", t=float(extremum.x))


def intersection_count(f: GraphPerturbation, g: GraphPerturbation, n_grid: int | None = None) -> Intersections:
    """All solutions of f(t) = g(t) in [0, 2π).

    Nodes where the difference vanishes exactly are roots; every strict sign
    change between consecutive nodes (cyclically) is refined with Brent's
    method to 1e-12.

    Args:
        f: The first graph.
        g: The second graph, with a different frequency or phase.
        n_grid: Bracketing nodes (default 640·(r + s)).

    Returns:
        The number of intersections and their sorted parameters.

    Raises:
        DegeneracyError: If the graphs coincide or meet non-transversally.
    """
    nodes = bracketing_grid(f, g, n_grid)
    values = f(nodes) - g(nodes)
    if np.max(np.abs(values)) < IDENTICAL:
        raise DegeneracyError("graphs are identical", t=0.0)

    d = _difference(f, g)
    roots = [float(t) for t in nodes[values == 0.0]]

    # the closing cell ends at 2π itself so brentq sees the same function values
    ends = np.append(nodes[1:], TWO_PI)
    next_values = np.append(values[1:], d(TWO_PI))
    for k in np.flatnonzero(values * next_values < 0):
        roots.append(brentq(d, float(nodes[k]), float(ends[k]), xtol=ROOT_TOLERANCE))

    params: list[float] = []
    for t in sorted(t % TWO_PI for t in roots):
        if params and t - params[-1] <= ROOT_TOLERANCE:
            continue
        params.append(t)
    if len(params) > 1 and params[0] + TWO_PI - params[-1] <= ROOT_TOLERANCE:
        params.pop()

    for t in params:
        if abs(float(f.derivative(t) - g.derivative(t))) < TRANSVERSALITY:
            raise DegeneracyError("non-transversal intersection", t=t)
    _check_tangencies(f, g, nodes, values)

    logger.debug("%d intersections of frequencies %d and %d", len(params), f.frequency, g.frequency)
    return Intersections(count=len(params), params=params)


def overlap_decomposition(f: GraphPerturbation, g: GraphPerturbation) -> OverlapDecomposition:
    """Signed normalized areas of the lenses between two graphs.

    Args:
        f: The first graph.
        g: The second graph.

    Returns:
        One lens per intersection with its signed area ∫(f − g) dt / (4π).

    Raises:
        DegeneracyError: If the graphs coincide or meet non-transversally.
        DomainError: If the graphs meet fewer than twice.
    """
    count, params = intersection_count(f, g)
    if count < 2:
        raise DomainError(f"a lens decomposition needs at least two intersections, found {count}")

    starts = np.array(params)
    stops = np.append(starts[1:], starts[0] + TWO_PI)
    signed = (f.primitive(stops) - g.primitive(stops) - f.primitive(starts) + g.primitive(starts)) / AREA_SCALE
    areas = [float(a) for a in signed]
    return OverlapDecomposition(
        intersection_params=params,
        component_signed_areas=areas,
        largest_component_area=max(abs(a) for a in areas),
    )


def overlap_quadrature(f: GraphPerturbation, g: GraphPerturbation, params: Sequence[float] | None = None) -> float:
    """Total normalized area between the graphs, ∫|f − g| dt / (4π), by adaptive quadrature."""
    breakpoints = list(params) if params is not None else intersection_count(f, g).params
    d = _difference(f, g)
    value, _ = quad(lambda t: abs(d(t)), 0.0, TWO_PI, points=breakpoints or None, limit=500, epsabs=1e-13, epsrel=1e-12)
    return value / AREA_SCALE


def lemma1_bound(f: GraphPerturbation, g: GraphPerturbation) -> BoundReport:
    """Upper bound 1/2 − ε′ on the Hofer distance of two transversal perturbations.

    ε′ is the largest lens area; the bound is strictly below 1/2 whenever the
    graphs are distinct and transversal.

    Raises:
        DegeneracyError: If the graphs coincide or meet non-transversally.
    """
    decomposition = overlap_decomposition(f, g)
    largest = decomposition.largest_component_area
    return BoundReport(
        kind="upper",
        value=0.5 - largest,
        source="perturbation_lemma",
        detail=(
            f"frequencies ({f.frequency}, {g.frequency}), amplitude {f.amplitude:.17g}; "
            f"{len(decomposition.intersection_params)} lenses, largest {largest:.17g}"
        ),
    )


def touching_frequencies(r: int, s: int) -> float | None:
    """Where the zero-phase graphs of frequencies r and s touch, if anywhere.

    sin(rt) - sin(st) = 2 cos((r + s)t/2) sin((r - s)t/2) has a double zero
    exactly when both factors vanish together. With g = gcd(r - s, r + s) that
    happens iff (r - s)/g is even and (r + s)/g is odd, first at t = π/g.

    >>> touching_frequencies(3, 7)
    1.5707963267948966
    >>> touching_frequencies(3, 5) is None
    True
    """
    if r == s:
        return 0.0
    g = math.gcd(r - s, r + s)
    if ((r - s) // g) % 2 == 0 and ((r + s) // g) % 2 == 1:
        return math.pi / g
    return None


def perturbed_embedding_bound(frequencies: Sequence[int] = (2, 3, 5), amplitude: float = 0.05) -> PerturbedEmbeddingReport:
    """Worst lens bound over all pairs of a perturbed great-circle embedding.

    Each antipodal pair of charts carries its own frequency; two equators from
    different charts are graphs with distinct frequencies over a common great
    circle, so every pair is strictly closer than 1/2.

    Args:
        frequencies: Pairwise distinct frequencies, at least two.
        amplitude: Common amplitude.

    Returns:
        The largest bound over all ordered pairs, with every pair's bound.

    Raises:
        DomainError: If fewer than two or repeated frequencies are given, or if
            two of them give graphs that touch without crossing.
    """
    if len(frequencies) < 2 or len(set(frequencies)) != len(frequencies):
        raise DomainError(f"need at least two distinct frequencies, got {tuple(frequencies)}")
    for r, s in combinations(frequencies, 2):
        t = touching_frequencies(r, s)
        if t is not None:
            raise DomainError(f"frequencies {r} and {s} give graphs that touch at t={t:.12g}")

    pair_bounds: dict[str, float] = {}
    worst: tuple[tuple[int, int], BoundReport] | None = None
    for r, s in permutations(frequencies, 2):
        bound = lemma1_bound(
            GraphPerturbation(amplitude=amplitude, frequency=r),
            GraphPerturbation(amplitude=amplitude, frequency=s),
        )
        pair_bounds[f"{r},{s}"] = bound.value
        if worst is None or bound.value > worst[1].value:
            worst = ((r, s), bound)

    assert worst is not None
    pair, bound = worst
    return PerturbedEmbeddingReport(
        frequencies=tuple(frequencies),
        amplitude=amplitude,
        pair=pair,
        bound=bound,
        pair_bounds=pair_bounds,
    )
