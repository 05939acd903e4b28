"""Critical-line zeros from sign changes of the phase-rotated zeta function."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError
from .integral import zeta_integral
from .numerics import LOG_PI, log_gamma, reference_zeta

__all__ = [
    "CriticalZero",
    "RotatedValue",
    "phase_theta",
    "rotated_zeta",
    "find_zeros",
    "T_CAP",
    "EVALUATORS",
]

# evaluator error budgets are validated only up to |Im s| = 50
T_CAP = 50.0
BRACKET_WIDTH = 1e-9
_EVAL_TOL = 1e-10


def _zeta_by_integral(s: complex) -> complex:
    return zeta_integral(s, _EVAL_TOL).value


EVALUATORS = {
    "integral": _zeta_by_integral,
    "reference": reference_zeta,
}


class RotatedValue(NamedTuple):
    z: float
    imag_leak: float


@dataclass(frozen=True)
class CriticalZero:
    b: float
    residual: float
    width: float
    b_reference: float

    @property
    def agreement(self) -> float:
        """Ordinate difference between the two independent evaluators."""
        return abs(self.b - self.b_reference)

    @property
    def s(self) -> complex:
        return complex(0.5, self.b)


def phase_theta(t: float) -> float:
    """theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi, continuous in t."""
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI


def rotated_zeta(t: float, evaluator: str = "integral") -> RotatedValue:
    """exp(i theta(t)) zeta(1/2 + it), which is real on the critical line.

    ``imag_leak`` is the size of the imaginary part actually computed, a
    running check on both the zeta evaluator and the phase.
    """
    zeta = EVALUATORS[evaluator](complex(0.5, t))
    theta = phase_theta(t)
    rotated = complex(math.cos(theta), math.sin(theta)) * zeta
    return RotatedValue(rotated.real, abs(rotated.imag))


def _bisect(f, lo: float, hi: float, f_lo: float) -> tuple[float, float]:
    while hi - lo > BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid, 0.0
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi), hi - lo


def find_zeros(t_min: float, t_max: float, scan_step: float = 0.1,
               limit: int | None = None) -> list[CriticalZero]:
    """Zeros 1/2 + ib with t_min <= b <= t_max, ascending.

    Scans the rotated zeta on a uniform grid, refines every sign change by
    bisection with the integral evaluator, then bisects the same bracket again
    with the eta-series evaluator so each zero carries both ordinates.
    ``limit`` stops after that many zeros.
    """
    if not (0.0 <= t_min <= t_max):
        raise PreconditionError("need 0 <= t_min <= t_max")
    if t_max > T_CAP:
        raise PreconditionError(f"range cap {T_CAP:g}: t_max = {t_max:g}")
    if not (0.0 < scan_step <= 0.5):
        raise PreconditionError("scan_step must lie in (0, 0.5]")
    if t_max == t_min:
        return []

    def f_int(t):
        return rotated_zeta(t, "integral").z

    def f_ref(t):
        return rotated_zeta(t, "reference").z

    steps = max(1, math.ceil((t_max - t_min) / scan_step - 1e-9))
    grid = [t_min + (t_max - t_min) * i / steps for i in range(steps + 1)]
    zeros: list[CriticalZero] = []
    prev_t, prev_z = grid[0], f_int(grid[0])
    for t in grid[1:]:
        z = f_int(t)
        if prev_z == 0.0 or (prev_z > 0) != (z > 0):
            if prev_z == 0.0:
                b, width = prev_t, 0.0
                b_ref = prev_t
            else:
                b, width = _bisect(f_int, prev_t, t, prev_z)
                b_ref, _ = _bisect(f_ref, prev_t, t, f_ref(prev_t))
            s = complex(0.5, b)
            residual = max(abs(_zeta_by_integral(s)), abs(reference_zeta(s)))
            if not zeros or b - zeros[-1].b > 1e-6:
                zeros.append(CriticalZero(b, residual, width, b_ref))
            if limit is not None and len(zeros) >= limit:
                break
        prev_t, prev_z = t, z
    return zeros
