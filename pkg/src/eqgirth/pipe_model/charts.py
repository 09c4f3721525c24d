"""Area charts of the pipe-equator family.

The fan coordinates (θ, φ) of a sphere point are pulled back to the pipe
parameters: φ fixes the side area a through the area of the region S cut off
by the rotated fan plane, θ fixes the side area b through the region of the
lower hemisphere swept out up to angle θ. Both charts are affine and are
written in endpoint form so that their endpoint values are exact in floating
point.
"""

import math

from eqgirth.exceptions import DomainError
from eqgirth.pipe_model.schema import MAX_DELTA, PipeParams, PlanarRegions, Region


def _check_delta_eps(delta: float, eps: float) -> None:
    if not 0.0 < delta <= MAX_DELTA:
        raise DomainError(f"delta={delta!r} outside (0, {MAX_DELTA}]")
    if not 0.0 < eps < math.pi / 4:
        raise DomainError(f"eps={eps!r} outside (0, pi/4)")


def _side_area(phi: float, delta: float, eps: float) -> float:
    # (1 - 2δ)/(4ε - 2π)·φ - δ/2 + 1/4, rewritten through its value at φ = 0
    return (0.25 - delta / 2) * (1.0 - phi / (math.pi / 2 - eps))


def area_S(phi: float, delta: float, eps: float) -> float:
    """Area of the region S cut off at fan angle φ ≥ 0.

    Args:
        phi: Fan angle in [0, π/2 − ε].
        delta: Pipe area in (0, 0.1].
        eps: Transition band width in (0, π/4).

    Returns:
        (1 − 2δ)/(4ε − 2π)·φ − δ/2 + 1/4, which decreases from 1/4 − δ/2 at
        φ = 0 to 0 at φ = π/2 − ε.

    Raises:
        DomainError: If any argument is out of range.

    Examples:
        >>> area_S(0.0, 0.01, 0.05)
        0.245
    """
    _check_delta_eps(delta, eps)
    if not 0.0 <= phi <= math.pi / 2 - eps:
        raise DomainError(f"phi={phi!r} outside [0, pi/2 - eps]")
    return _side_area(phi, delta, eps)


def a_of_phi(phi: float, delta: float, eps: float) -> float:
    """Side area a as a function of the fan angle.

    Agrees with `area_S` for φ ≥ 0 and continues affinely to negative φ,
    reaching 1/2 − δ at φ = −(π/2 − ε).

    Raises:
        DomainError: If |φ| > π/2 − ε or δ, ε are out of range.
    """
    _check_delta_eps(delta, eps)
    if abs(phi) > math.pi / 2 - eps:
        raise DomainError(f"|phi|={abs(phi)!r} exceeds pi/2 - eps")
    return _side_area(phi, delta, eps)


def b_of_theta(theta: float, delta: float) -> float:
    """Side area b as a function of the angle along the circle.

    Args:
        theta: Angle in [0, 2π].
        delta: Pipe area in (0, 0.1].

    Returns:
        (2δ − 1)/(4π)·θ + 1/2 − δ, from 1/2 − δ at θ = 0 down to 0 at θ = 2π.

    Raises:
        DomainError: If theta or delta is out of range.
    """
    if not 0.0 < delta <= MAX_DELTA:
        raise DomainError(f"delta={delta!r} outside (0, {MAX_DELTA}]")
    if not 0.0 <= theta <= 2 * math.pi:
        raise DomainError(f"theta={theta!r} outside [0, 2pi]")
    return (0.5 - delta) * (1.0 - theta / (2 * math.pi))


def region_of(phi: float, eps: float) -> Region:
    """Classify a fan angle into the pipe region or one of the bands.

    The pipe region is |φ| ≤ π/2 − 2ε. Points with π/2 − 2ε < |φ| ≤ π/2 − ε
    lie in a transition band where the pipe equators are deformed back to the
    boundary circle, and points beyond lie in a polar band.
    """
    magnitude = abs(phi)
    if magnitude <= math.pi / 2 - 2 * eps:
        return "pipe"
    if magnitude <= math.pi / 2 - eps:
        return "transition"
    return "polar"


def pipe_params_at(theta: float, phi: float, delta: float, eps: float) -> PipeParams:
    """Pull a point of the pipe region back to its pipe-equator parameters.

    Raises:
        DomainError: If (θ, φ) lies outside the pipe region or on θ ∈ {0, 2π}.
    """
    if region_of(phi, eps) != "pipe":
        raise DomainError(f"phi={phi!r} outside the pipe region |phi| <= pi/2 - 2 eps")
    a = a_of_phi(phi, delta, eps)
    b = b_of_theta(theta, delta)
    try:
        return PipeParams(a=a, b=b, delta=delta)
    except ValueError as e:
        raise DomainError(f"(theta={theta!r}, phi={phi!r}) maps outside the open parameter box") from e


def planar_regions(p: PipeParams) -> PlanarRegions:
    """Area bookkeeping of a pipe equator in the planar picture.

    Args:
        p: The pipe parameters.

    Returns:
        L = b, C = a, both pipes δ, and R, U the complements within each half.

    Raises:
        DomainError: If p is not a valid PipeParams instance.

    Examples:
        >>> planar_regions(PipeParams(a=0.2, b=0.3, delta=0.01)).L
        0.3
    """
    if not isinstance(p, PipeParams):
        raise DomainError(f"expected PipeParams, got {type(p).__name__}")
    return PlanarRegions(
        L=p.b,
        R=0.5 - p.delta - p.b,
        C=p.a,
        U=0.5 - p.delta - p.a,
        Pe=p.delta,
        Pi=p.delta,
    )
