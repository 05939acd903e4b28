"""zeta(s) from its sawtooth integral representation.

    zeta(s) = s/(s-1) - s * int_1^inf {x} x^(-s-1) dx,   Re s > 0, s != 1.

The integrand has a kink at every integer, so the finite part is summed
interval by interval from exact closed forms and the tail beyond the cutoff
``X`` is handled analytically: the mean of {x} contributes X^-s / (2s) and the
zero-mean remainder is expanded against periodic Bernoulli functions, which
also yields a rigorous bound on what is left over.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, PoleError, PreconditionError, ToleranceUnreachableError
from .numerics import as_complex, complex_expm1, complex_fsum

__all__ = [
    "StripPoint",
    "QuadratureResult",
    "sawtooth_moment",
    "sawtooth_integral",
    "tail_estimate",
    "improper_sawtooth_integral",
    "zeta_integral",
    "DEFAULT_TAIL_ORDER",
    "MAX_INTERVALS",
]

DEFAULT_TAIL_ORDER = 4
MAX_INTERVALS = 10 ** 7
_START_CUTOFF = 16
_CHUNK = 1 << 18
_ZETA3 = 1.2020569031595943  # upper bound for zeta(2p+1), p >= 1
# allowance for float64 rounding in the returned tail value
_ROUNDING = 16 * 2.0 ** -52
_SERIES_RADIUS = 0.25


@dataclass(frozen=True)
class StripPoint:
    """s = a + ib. General evaluation allows any a > 0; audit use needs the
    open critical strip 0 < a < 1 and b > 0 (see :meth:`require_strip`)."""

    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"non-finite strip point ({self.a}, {self.b})")

    @property
    def s(self) -> complex:
        return complex(self.a, self.b)

    @property
    def in_strip(self) -> bool:
        return 0.0 < self.a < 1.0 and self.b > 0.0

    def require_strip(self) -> "StripPoint":
        if not self.in_strip:
            raise PreconditionError(
                f"point (a={self.a}, b={self.b}) must satisfy 0 < a < 1 and b > 0")
        return self

    def mirror(self) -> "StripPoint":
        """The point 1 - conj(s) = (1 - a) + ib; keeps b > 0."""
        return StripPoint(1.0 - self.a, self.b)


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    tail_bound: float
    intervals_used: int


def _check_s(s) -> complex:
    s = as_complex(s)
    if s == 0:
        raise DomainError("s = 0: closed-form denominators vanish")
    if s == 1:
        raise PoleError("s = 1: closed-form denominators vanish (pole at s = 1)")
    return s


def _moments(n: np.ndarray, s: complex, theta=1.0) -> np.ndarray:
    """int_n^(n+theta) (x - n) x^(-s-1) dx for each n, 0 < theta <= 1.

    Equals n^(1-s) F(h) with h = theta/n and F(h) = int_0^h u (1+u)^(-s-1) du.
    Near the start F is the closed form d/(s(1-s)) + (1+d) h/(1-s) with
    d = (1+h)^(-s) - 1 from expm1/log1p. Its two O(h) parts cancel to leave
    O(h^2), so once (|s|+2) h <= 1/4 the binomial series of F is used instead.
    """
    n = np.atleast_1d(np.asarray(n, dtype=float))
    h = np.broadcast_to(theta / n, n.shape)
    out = np.empty(n.shape, dtype=complex)
    small = h * (abs(s) + 2.0) <= _SERIES_RADIUS
    if np.any(~small):
        hb = h[~small]
        d = complex_expm1(-s * np.log1p(hb))
        out[~small] = d / (s * (1.0 - s)) + (1.0 + d) * hb / (1.0 - s)
    if np.any(small):
        out[small] = _series_f(h[small], s)
    return np.exp((1.0 - s) * np.log(n)) * out


def _series_f(h: np.ndarray, s: complex) -> np.ndarray:
    # F(h) = h^2 sum_k c_k h^k / (k+2), c_k = binom(-s-1, k); ratio <= 1/4
    h_max = float(np.max(h))
    total = np.zeros(np.shape(h), dtype=complex)
    coef = 1.0 + 0j
    power = np.ones(np.shape(h))
    for k in range(200):
        total += coef / (k + 2) * power
        if abs(coef) * h_max ** (k + 1) < 1e-18:
            break
        coef *= -(s + 1.0 + k) / (k + 1)
        power = power * h
    return h * h * total


def sawtooth_moment(n: int, s) -> complex:
    """Exact integral of {x} x^(-s-1) over [n, n+1]."""
    s = _check_s(s)
    if int(n) != n or n < 1:
        raise DomainError(f"interval index must be a positive integer, got {n!r}")
    return complex(_moments(np.array([float(n)]), s)[0])


def sawtooth_integral(s, X: float) -> complex:
    """int_1^X {x} x^(-s-1) dx, summed per unit interval.

    A fractional final interval [floor X, X] uses the same closed form with
    the upper limit moved to X.
    """
    s = _check_s(s)
    X = float(X)
    if not X >= 1.0:
        raise DomainError(f"cutoff X must be >= 1, got {X}")
    m = math.floor(X)
    if m - 1 > MAX_INTERVALS:
        raise DomainError(f"cutoff {X} exceeds the interval cap {MAX_INTERVALS}")
    theta = X - m
    parts = []
    for lo in range(1, m, _CHUNK):
        n = np.arange(lo, min(lo + _CHUNK, m), dtype=float)
        parts.append(complex_fsum(_moments(n, s)))
    if theta > 0.0:
        parts.append(complex(_moments(np.array([float(m)]), s, theta)[0]))
    return complex_fsum(parts) if parts else 0j


@lru_cache(maxsize=None)
def _bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    # B_1 = -1/2 convention, so B_1(t) = t - 1/2
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / Fraction(m + 1))
    return tuple(b)


def _bernoulli_poly(n: int, t: float) -> float:
    b = _bernoulli_numbers(n)
    return sum(float(math.comb(n, k) * b[k]) * t ** (n - k) for k in range(n + 1))


def _rising(z: complex, k: int) -> complex:
    out = 1.0 + 0j
    for i in range(k):
        out *= z + i
    return out


def tail_estimate(s, X: float, order: int = DEFAULT_TAIL_ORDER) -> tuple[complex, float]:
    """Analytic value and rigorous error bound for int_X^inf {x} x^(-s-1) dx.

    Writes {x} = 1/2 + B1({x}); the 1/2 part gives X^-s / (2s) exactly. The
    B1 part is integrated by parts against the periodic Bernoulli functions:

    * ``order=0``: one step against P(x) = ({x}^2 - {x})/2, |P| <= 1/8, giving
      the boundary term -P({X}) X^(-s-1) and the bound
      |s+1|/8 * X^(-a-1)/(a+1).
    * ``order=p >= 1``: 2p steps; boundary terms use B_j({X}) and the
      remainder is bounded with sup|B_(2p+1)|/(2p+1)! <= 2 zeta(3)/(2 pi)^(2p+1),
      giving |(s+1)_(2p)| X^(-a-2p)/(a+2p) times that constant.

    Returns ``(value, bound)`` with |true tail - value| <= bound; the bound
    carries a small allowance for rounding in ``value`` itself.
    """
    s = _check_s(s)
    X = float(X)
    a = s.real
    if not a > 0:
        raise DomainError("tail_estimate requires Re(s) > 0")
    if not X >= 1.0:
        raise DomainError(f"cutoff X must be >= 1, got {X}")
    if order < 0:
        raise ValueError("order must be >= 0")
    theta = X - math.floor(X)
    log_x = math.log(X)
    x_pow = np.exp(-s * log_x)  # X^-s
    value = complex(x_pow) / (2.0 * s)
    magnitude = abs(value)

    if order == 0:
        p_theta = 0.5 * (theta * theta - theta)
        value -= p_theta * complex(x_pow) / X
        bound = abs(s + 1.0) / 8.0 * X ** (-a - 1.0) / (a + 1.0)
        return value, bound + _ROUNDING * (magnitude + abs(value))

    m = 2 * order
    # g^(k)(X) = (-1)^k (s+1)_k X^(-s-1-k), c_j = B_(j+1)(theta)/(j+1)! g^(j-1)(X)
    for j in range(1, m + 1):
        bj = _bernoulli_poly(j + 1, theta)
        if bj == 0.0:
            continue
        k = j - 1
        g_k = (-1) ** k * _rising(s + 1.0, k) * complex(x_pow) / X ** (k + 1)
        c_j = bj / math.factorial(j + 1) * g_k
        value += (-1) ** j * c_j
        magnitude += abs(c_j)
    sup_b = 2.0 * _ZETA3 / (2.0 * math.pi) ** (m + 1)
    bound = sup_b * abs(_rising(s + 1.0, m)) * X ** (-a - m) / (a + m)
    return value, bound + _ROUNDING * magnitude


def _choose_cutoff(s: complex, tolerance: float, order: int, scale: float):
    X = _START_CUTOFF
    cap = MAX_INTERVALS + 1
    while True:
        tail, bound = tail_estimate(s, X, order)
        if scale * bound <= tolerance:
            return X, tail, bound
        if X >= cap:
            raise ToleranceUnreachableError(
                f"tolerance unreachable at cutoff cap {MAX_INTERVALS} intervals: "
                f"achieved bound {scale * bound:.3e} > {tolerance:.3e}",
                achieved_bound=scale * bound)
        X = min(2 * X, cap)


def improper_sawtooth_integral(s, tolerance: float = 1e-12,
                               order: int = DEFAULT_TAIL_ORDER) -> QuadratureResult:
    """int_1^inf {x} x^(-s-1) dx with |error| <= ``tail_bound`` <= tolerance."""
    s = _check_s(s)
    if not s.real > 0:
        raise DomainError("the sawtooth integral converges only for Re(s) > 0")
    if not tolerance > 0:
        raise ValueError("tolerance must be positive")
    X, tail, bound = _choose_cutoff(s, tolerance, order, 1.0)
    return QuadratureResult(sawtooth_integral(s, X) + tail, bound, X - 1)


def zeta_integral(s, tolerance: float = 1e-10,
                  order: int = DEFAULT_TAIL_ORDER) -> QuadratureResult:
    """zeta(s) = s/(s-1) - s * int_1^inf {x} x^(-s-1) dx.

    The cutoff doubles from 16 until |s| times the tail bound is within
    ``tolerance``; ``tail_bound`` of the result is that final guarantee.
    """
    s = as_complex(s)
    if s == 1:
        raise PoleError("pole at s = 1")
    if not s.real > 0:
        raise DomainError("zeta_integral requires Re(s) > 0")
    if not tolerance >= 1e-10:
        raise ValueError("tolerance must be >= 1e-10")
    X, tail, bound = _choose_cutoff(s, tolerance, order, abs(s))
    total = sawtooth_integral(s, X) + tail
    value = s / (s - 1.0) - s * total
    return QuadratureResult(value, abs(s) * bound, X - 1)
