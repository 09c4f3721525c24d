"""Hamiltonian flow of a graph perturbation.

For a zero-mean f the function H(q, p) = ∫₀^q f(t) dt is a well-defined
Hamiltonian on the annulus. With dq/dt = ∂H/∂p and dp/dt = −∂H/∂q its flow is
(q, p) ↦ (q, p − t·f(q)), so the time-1 image of the zero section is the
graph of −f.
"""

import logging
import math
from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import quad

from eqgirth.exceptions import DomainError
from eqgirth.perturbation.schema import GraphFlowReport, GraphPerturbation

logger = logging.getLogger(__name__)

FLOW_SIGN = -1
MIN_STEPS = 100

VectorField = Callable[[NDArray[np.float64], NDArray[np.float64]], NDArray[np.float64]]


def symplectic_euler(
    dH_dq: VectorField,
    dH_dp: VectorField,
    q0: NDArray[np.float64],
    p0: NDArray[np.float64],
    duration: float,
    n_steps: int,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Integrate Hamilton's equations with the symplectic Euler scheme.

    Args:
        dH_dq: Partial derivative of H in q.
        dH_dp: Partial derivative of H in p.
        q0: Initial positions.
        p0: Initial momenta.
        duration: Total time.
        n_steps: Number of steps.

    Returns:
        Positions and momenta at the final time.
    """
    dt = duration / n_steps
    q, p = np.array(q0, dtype=np.float64), np.array(p0, dtype=np.float64)
    for _ in range(n_steps):
        p = p - dt * dH_dq(q, p)
        q = q + dt * dH_dp(q, p)
    return q, p


def graph_flow_check(f: GraphPerturbation, n_steps: int = 1000, n_points: int = 512) -> GraphFlowReport:
    """Compare the time-1 flow of H = ∫f with the graph of f.

    Args:
        f: The graph perturbation.
        n_steps: Integrator steps, at least 100.
        n_points: Starting points (q, 0) on the zero section.

    Returns:
        The largest deviation |p(1) − σ·f(q)| with σ = −1, and the period
        defect H(2π) − H(0) computed by adaptive quadrature.

    Raises:
        DomainError: If n_steps is below 100.
    """
    if n_steps < MIN_STEPS:
        raise DomainError(f"graph flow needs at least {MIN_STEPS} steps, got {n_steps}")

    q0 = np.linspace(0.0, 2 * math.pi, n_points, endpoint=False)
    q1, p1 = symplectic_euler(
        dH_dq=lambda q, p: f(q),
        dH_dp=lambda q, p: np.zeros_like(p),
        q0=q0,
        p0=np.zeros_like(q0),
        duration=1.0,
        n_steps=n_steps,
    )
    deviation = float(np.max(np.abs(p1 - FLOW_SIGN * f(q1))))
    period_defect, _ = quad(lambda t: float(f(t)), 0.0, 2 * math.pi, limit=200, epsabs=1e-14)

    logger.debug("graph flow deviation %.3e after %d steps", deviation, n_steps)
    return GraphFlowReport(
        max_deviation=deviation,
        sign=FLOW_SIGN,
        period_defect=period_defect,
        n_steps=n_steps,
        n_points=n_points,
    )
