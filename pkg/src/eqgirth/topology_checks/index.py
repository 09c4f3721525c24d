"""Index of the rotation lift at its singular point.

Every point x other than the north pole N is reached from the south pole by a
unique minimal rotation R_x. Pushing the tangent vector e₁ at the south pole
forward gives a unit vector field v(x) = R_x(e₁) with a single singularity at
N. Its index there is χ(S²) = 2, computed here as the winding of v in the
stereographic chart from the south pole around a small circle about N.

The same loop of rotations, brought back into the stabilizer of the south pole,
moves the base point of L₀ (the equator with the south pole on its left) twice
around L₀, which is the evaluation winding.
"""

import logging
import math

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from eqgirth.exceptions import ConfigError, DomainError, ResolutionError, SingularityError
from eqgirth.sphere_geom import NORTH_POLE, SOUTH_POLE, SpherePoint
from eqgirth.topology_checks.schema import FrameSample, WindingResult

logger = logging.getLogger(__name__)

REFERENCE_TANGENT = np.array([1.0, 0.0, 0.0])
SINGULAR_DISTANCE = 1e-6
MIN_RADIUS = 1e-3
MAX_RADIUS = 0.3
MIN_SAMPLES = 256
MAX_JUMP = math.pi / 2

TWO_PI = 2 * math.pi


def _minimal_rotation(src: NDArray[np.float64], dst: NDArray[np.float64], vectors: NDArray[np.float64]) -> NDArray[np.float64]:
    """Apply, row by row, the minimal rotation taking ``src`` to ``dst``.

    With k = src × dst and c = src · dst the rotation is
    v ↦ c·v + k × v + k (k · v) / (1 + c), undefined only when dst = −src.
    """
    src, dst = np.broadcast_arrays(np.atleast_2d(src), np.atleast_2d(dst))
    vectors = np.broadcast_to(np.atleast_2d(vectors), src.shape)
    k = np.cross(src, dst)
    cos = np.einsum("ij,ij->i", src, dst)
    # 1 + c = |src + dst|² / 2 stays accurate near the antipode
    one_plus_cos = 0.5 * np.einsum("ij,ij->i", src + dst, src + dst)
    k_dot_v = np.einsum("ij,ij->i", k, vectors)
    return cos[:, None] * vectors + np.cross(k, vectors) + k * (k_dot_v / one_plus_cos)[:, None]


def lift_vectors(points: NDArray[np.float64]) -> NDArray[np.float64]:
    """The frame v(x) = R_x(e₁) at every row of ``points``.

    Raises:
        SingularityError: If a point lies within 1e-6 of the north pole.
    """
    x = np.atleast_2d(np.asarray(points, dtype=np.float64))
    distance = np.linalg.norm(x - NORTH_POLE.array, axis=1)
    if np.any(distance <= SINGULAR_DISTANCE):
        k = int(np.argmin(distance))
        raise SingularityError(f"frame lift evaluated {distance[k]:.3g} from its singular point at the north pole")

    v = _minimal_rotation(SOUTH_POLE.array, x, REFERENCE_TANGENT)
    v -= np.einsum("ij,ij->i", v, x)[:, None] * x
    return v / np.linalg.norm(v, axis=1)[:, None]


def lift_frame(x: SpherePoint) -> FrameSample:
    """Unit tangent frame at x obtained from the minimal rotation of the south pole onto x.

    Args:
        x: Any point at least 1e-6 away from the north pole.

    Returns:
        The frame sample (x, R_x(e₁)); at the south pole the vector is e₁.

    Raises:
        SingularityError: If x lies within 1e-6 of the north pole.
    """
    v = lift_vectors(x.array)[0]
    return FrameSample(base=x, vector=(float(v[0]), float(v[1]), float(v[2])))


def _check_loop(radius: float, n_samples: int) -> None:
    if not MIN_RADIUS <= radius <= MAX_RADIUS:
        raise DomainError(f"loop radius {radius!r} outside [{MIN_RADIUS}, {MAX_RADIUS}]")
    if n_samples < MIN_SAMPLES:
        raise ConfigError(f"loop needs at least {MIN_SAMPLES} samples, got {n_samples}")


def loop_points(radius: float, n_samples: int, reverse: bool = False) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Circle of geodesic radius ``radius`` about the north pole.

    The forward loop runs counterclockwise seen from above the north pole.

    Returns:
        The loop parameters s and the points, shape (n_samples, 3).
    """
    _check_loop(radius, n_samples)
    s = np.arange(n_samples) * (TWO_PI / n_samples)
    if reverse:
        s = -s
    points = np.column_stack([
        math.sin(radius) * np.cos(s),
        math.sin(radius) * np.sin(s),
        np.full(n_samples, math.cos(radius)),
    ])
    return s, points


def chart_angles(points: NDArray[np.float64], vectors: NDArray[np.float64]) -> NDArray[np.float64]:
    """Angle of each tangent vector in the stereographic chart from the south pole.

    The chart is P(x) = (x₁, x₂) / (1 + x₃), whose differential maps v to
    (v₁/(1+x₃) − x₁v₃/(1+x₃)², v₂/(1+x₃) − x₂v₃/(1+x₃)²).
    """
    scale = 1.0 / (1.0 + points[:, 2])
    w1 = vectors[:, 0] * scale - points[:, 0] * vectors[:, 2] * scale**2
    w2 = vectors[:, 1] * scale - points[:, 1] * vectors[:, 2] * scale**2
    return np.arctan2(w2, w1)


def _increments(angles: NDArray[np.float64]) -> NDArray[np.float64]:
    steps = np.diff(np.append(angles, angles[0]))
    steps = (steps + math.pi) % TWO_PI - math.pi
    k = int(np.argmax(np.abs(steps)))
    if abs(steps[k]) > MAX_JUMP:
        raise ResolutionError(f"angle jumps by {steps[k]:.6g} between samples {k} and {k + 1}; increase n_samples")
    return steps


def _winding(angles: NDArray[np.float64], radius: float, n_samples: int) -> WindingResult:
    total = math.fsum(_increments(angles))
    winding = round(total / TWO_PI)
    return WindingResult(
        radius=radius,
        n_samples=n_samples,
        total_angle=total,
        winding=winding,
        residual=abs(total - TWO_PI * winding),
    )


def chart_winding(radius: float, n_samples: int = 4096, reverse: bool = False) -> WindingResult:
    """Accumulated chart angle of the lifted frame around the north pole.

    Args:
        radius: Geodesic radius of the loop, in [1e-3, 0.3].
        n_samples: Samples along the loop, at least 256.
        reverse: Traverse the loop clockwise.

    Returns:
        The accumulated angle and its winding number.

    Raises:
        DomainError: If the radius is out of range.
        ConfigError: If n_samples is below 256.
        ResolutionError: If consecutive samples differ in angle by more than π/2.
    """
    _, points = loop_points(radius, n_samples, reverse)
    result = _winding(chart_angles(points, lift_vectors(points)), radius, n_samples)
    logger.debug("chart winding %d at radius %g (residual %.3g)", result.winding, radius, result.residual)
    return result


def winding_number_at_singularity(radius: float, n_samples: int = 4096, reverse: bool = False) -> int:
    """Index of the lifted frame at its singular point, read off a loop of the given radius.

    Raises:
        DomainError: If the radius is out of range.
        ConfigError: If n_samples is below 256.
        ResolutionError: If the loop is sampled too coarsely.
    """
    return chart_winding(radius, n_samples, reverse).winding


def evaluation_angles(points: NDArray[np.float64]) -> NDArray[np.float64]:
    """Position on L₀ of the base point e₁ under the stabilizer loop.

    For each x the rotation R_x is followed by the minimal rotation taking x to
    the north pole and the half-turn about e₁, which returns the south pole to
    itself. The image of e₁ then lies on L₀ and is reported by its parameter
    t, where L₀ is traversed as (sin t, cos t, 0).
    """
    v = lift_vectors(points)
    to_north = _minimal_rotation(points, NORTH_POLE.array, v)
    image = to_north * np.array([1.0, -1.0, -1.0])
    return np.arctan2(image[:, 0], image[:, 1])


def evaluation_loop(radius: float, n_samples: int = 4096, reverse: bool = False) -> WindingResult:
    """Accumulated angle of the evaluation loop on L₀.

    Raises:
        DomainError: If the radius is out of range.
        ConfigError: If n_samples is below 256.
        ResolutionError: If the loop is sampled too coarsely.
    """
    _, points = loop_points(radius, n_samples, reverse)
    result = _winding(evaluation_angles(points), radius, n_samples)
    logger.debug("evaluation winding %d at radius %g (residual %.3g)", result.winding, radius, result.residual)
    return result


def evaluation_winding(radius: float, n_samples: int = 4096, reverse: bool = False) -> int:
    """Degree of the evaluation loop of the lift in L₀ over the same loop as the index."""
    return evaluation_loop(radius, n_samples, reverse).winding


def winding_loop_frame(radii: tuple[float, ...], n_samples: int) -> pd.DataFrame:
    """Unwrapped chart and evaluation angles along the loop at each radius.

    Returns:
        A frame with columns radius, s, chart_angle and evaluation_angle.
    """
    frames = []
    for radius in radii:
        s, points = loop_points(radius, n_samples)
        chart = chart_angles(points, lift_vectors(points))
        evaluation = evaluation_angles(points)
        frames.append(pd.DataFrame({
            "radius": radius,
            "s": s,
            "chart_angle": chart[0] + np.concatenate([[0.0], np.cumsum(_increments(chart)[:-1])]),
            "evaluation_angle": evaluation[0] + np.concatenate([[0.0], np.cumsum(_increments(evaluation)[:-1])]),
        }))
    return pd.concat(frames, ignore_index=True)
