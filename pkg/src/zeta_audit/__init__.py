"""Sawtooth-integral zeta evaluation and a numerical audit of an
integration-by-parts argument about where its zeros lie."""
from .errors import (
    DomainError,
    OverflowGuardError,
    PoleError,
    PreconditionError,
    ToleranceUnreachableError,
)
from .integral import (
    QuadratureResult,
    StripPoint,
    improper_sawtooth_integral,
    sawtooth_integral,
    sawtooth_moment,
    tail_estimate,
    zeta_integral,
)
from .numerics import (
    CompensatedAccumulator,
    compensated_sum,
    finite_difference_derivative,
    log_gamma,
    reference_zeta,
)
from .zeros import CriticalZero, find_zeros, phase_theta, rotated_zeta

__version__ = "0.1.0"

__all__ = [
    "DomainError", "OverflowGuardError", "PoleError", "PreconditionError",
    "ToleranceUnreachableError",
    "QuadratureResult", "StripPoint", "improper_sawtooth_integral", "sawtooth_integral",
    "sawtooth_moment", "tail_estimate", "zeta_integral",
    "CompensatedAccumulator", "compensated_sum", "finite_difference_derivative", "log_gamma",
    "reference_zeta",
    "CriticalZero", "find_zeros", "phase_theta", "rotated_zeta",
]
