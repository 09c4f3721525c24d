"""Error hierarchy for eqgirth.

Every error raised by the numerical modules derives from ``EquatorGirthError``.
The concrete errors also derive from ``ValueError`` so callers that only expect
built-in argument errors keep working.
"""


class EquatorGirthError(Exception):
    """Base class for all eqgirth errors."""


class DomainError(EquatorGirthError, ValueError):
    """An argument lies outside the domain declared by the operation."""


class ConfigError(EquatorGirthError, ValueError):
    """A grid size, resolution or other run parameter is out of range."""


class TopologyError(EquatorGirthError, ValueError):
    """A sampled curve is not simple (its polygon self-intersects)."""


class ChartError(EquatorGirthError, ValueError):
    """A curve comes too close to a pole of the chart used for quadrature."""


class SingularityError(EquatorGirthError, ValueError):
    """A frame lift was evaluated at (or too near) its singular point."""


class ResolutionError(EquatorGirthError, ValueError):
    """Sampling is too coarse to accumulate an angle without ambiguity."""


class DegeneracyError(EquatorGirthError, ValueError):
    """Two graphs meet non-transversally.

    Attributes:
        t: Parameter value at which the degeneracy was detected.
    """

    def __init__(self, message: str, t: float) -> None:
        super().__init__(f"{message} (t={t:.12g})")
        self.t = t
