"""Scalar numerics: validated complex inputs, stable sums, log-gamma and an
independent eta-series zeta used as an oracle by the rest of the package.

Complex values are plain Python ``complex``; :func:`as_complex` is the single
gate that rejects NaN/Inf at the API boundary.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, PoleError

__all__ = [
    "as_complex",
    "modulus_squared",
    "complex_expm1",
    "compensated_sum",
    "complex_fsum",
    "CompensatedAccumulator",
    "log_gamma",
    "reference_zeta",
    "eta_terms_needed",
    "finite_difference_derivative",
    "ETA_MIN_TERMS",
]

LOG_PI = math.log(math.pi)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Minimum number of accelerated eta terms; raised automatically for large |Im s|.
ETA_MIN_TERMS = 50
_ETA_MAX_TERMS = 400
_ETA_TARGET = 1e-14


def as_complex(z) -> complex:
    """Coerce ``z`` to ``complex`` and reject non-finite components."""
    try:
        w = complex(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a complex number: {z!r}") from exc
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError(f"non-finite complex value: {w!r}")
    return w


def modulus_squared(z: complex) -> float:
    return z.real * z.real + z.imag * z.imag


def complex_expm1(z):
    """``exp(z) - 1`` without cancellation for small ``|z|``.

    Works elementwise on numpy arrays; returns ``complex`` for scalar input.
    """
    x = np.real(z)
    y = np.imag(z)
    s = np.sin(0.5 * y)
    re = np.expm1(x) * np.cos(y) - 2.0 * s * s
    im = np.exp(x) * np.sin(y)
    out = re + 1j * im
    if np.ndim(out) == 0:
        return complex(out)
    return out


def compensated_sum(terms: Iterable[float]) -> float:
    """Exactly rounded sum of real terms (``math.fsum``)."""
    return math.fsum(terms)


def complex_fsum(values) -> complex:
    """Exactly rounded componentwise sum of a complex array."""
    arr = np.asarray(values, dtype=complex)
    return complex(math.fsum(arr.real), math.fsum(arr.imag))


class CompensatedAccumulator:
    """Running Neumaier sum for streams that arrive in chunks.

    ``sum`` holds the rounded running total and ``compensation`` the lost
    low-order part; :attr:`value` is their sum.
    """

    __slots__ = ("sum", "compensation")

    def __init__(self, start: float = 0.0):
        self.sum = float(start)
        self.compensation = 0.0

    def add(self, x: float) -> None:
        x = float(x)
        t = self.sum + x
        if abs(self.sum) >= abs(x):
            self.compensation += (self.sum - t) + x
        else:
            self.compensation += (x - t) + self.sum
        self.sum = t

    def extend(self, xs: Iterable[float]) -> None:
        for x in xs:
            self.add(x)

    @property
    def value(self) -> float:
        return self.sum + self.compensation


def _sinpi(z: complex) -> complex:
    # argument reduction keeps sin(pi*x) accurate for large real parts
    x = math.fmod(z.real, 2.0)
    y = math.pi * z.imag
    return complex(math.sin(math.pi * x) * math.cosh(y),
                   math.cos(math.pi * x) * math.sinh(y))


def _lanczos_log_gamma(z: complex) -> complex:
    z = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * cmath.log(t) - t + cmath.log(acc)


def log_gamma(z) -> complex:
    """Principal branch of log Gamma(z), analytic off the negative real axis.

    Uses the Lanczos sum for ``Re z >= 0.5`` and the reflection formula
    below that, with the 2*pi*i branch correction that keeps the result
    continuous in ``Im z``.
    """
    z = as_complex(z)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"log_gamma pole at z = {z.real:g}")
    if z.real >= 0.5:
        return _lanczos_log_gamma(z)
    shift = math.copysign(2.0 * math.pi, z.imag) * math.floor(0.5 * z.real + 0.25)
    return (complex(LOG_PI, shift) - cmath.log(_sinpi(z))
            - _lanczos_log_gamma(1.0 - z))


@lru_cache(maxsize=None)
def _eta_weights(n: int) -> np.ndarray:
    # Borwein's d_k computed exactly, then w_k = (-1)^k (d_k - d_n) / d_n
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4 ** i,
                        math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    w = np.array([float((d[k] - dn) / dn) for k in range(n)])
    w[1::2] *= -1.0
    w.setflags(write=False)
    return w


def eta_terms_needed(s: complex, target: float = _ETA_TARGET) -> int:
    """Number of accelerated eta terms whose truncation bound meets ``target``.

    Bound: 3 (1 + 2|t|) exp(pi |t| / 2) / (3 + sqrt 8)^n, relative to
    |1 - 2^(1-s)|.
    """
    t = abs(s.imag)
    denom = abs(complex_expm1((1.0 - s) * math.log(2.0)))
    log_need = (math.log(3.0 * (1.0 + 2.0 * t)) + 0.5 * math.pi * t
                - math.log(target * max(denom, 1e-300)))
    n = math.ceil(log_need / math.log(3.0 + math.sqrt(8.0))) + 10
    return max(ETA_MIN_TERMS, min(n, _ETA_MAX_TERMS))


def reference_zeta(s, terms: int | None = None) -> complex:
    """zeta(s) from the accelerated alternating (eta) series.

    zeta(s) = eta(s) / (1 - 2^(1-s)); eta is summed with Borwein's
    Chebyshev-weighted acceleration. Independent of the sawtooth integral
    route, so the two serve as each other's oracle.
    """
    s = as_complex(s)
    if s == 1:
        raise PoleError("pole at s = 1")
    if s.real <= 0:
        raise DomainError("reference_zeta requires Re(s) > 0")
    factor = -complex_expm1((1.0 - s) * math.log(2.0))  # 1 - 2^(1-s)
    if factor == 0:
        raise DomainError(f"1 - 2^(1-s) vanishes at s = {s}")
    n = terms if terms is not None else eta_terms_needed(s)
    w = _eta_weights(n)
    k1 = np.arange(1, n + 1, dtype=float)
    powers = np.exp(-s * np.log(k1))
    return -complex_fsum(w * powers) / factor


def finite_difference_derivative(f: Callable[[float], float], x: float, h: float) -> float:
    """Central difference ``(f(x+h) - f(x-h)) / (2h)``."""
    if not h > 0:
        raise ValueError("step h must be positive")
    return (f(x + h) - f(x - h)) / (2.0 * h)
