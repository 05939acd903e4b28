"""Boundary terms that survive after dividing out the common denominator.

Each component leaves a term T(N) = N^alpha (c1 cos(b ln N) + c2 sin(b ln N))
whose limit as N -> inf is asserted to exist. Sampling T along its peak-phase
subsequence N_k = exp((2 pi k + phi*)/b) and regressing log|T| on log N
measures the growth rate alpha directly: a positive, well-resolved alpha
means the limit does not exist.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import optimize, stats

from ..errors import OverflowGuardError, PreconditionError
from ..integral import StripPoint
from ..kernels import Component
from .verdicts import Status, StepVerdict

__all__ = [
    "OscillationSeries",
    "oscillation_coefficients",
    "oscillation_term",
    "peak_phase",
    "sample_oscillation",
    "limit_claim_audit",
    "SIGNIFICANCE",
]

SIGNIFICANCE = 10.0
_LOG_CAP = math.log(1e300)
_MIN_SAMPLES = 3

TermFunction = Callable[[np.ndarray], np.ndarray]


def oscillation_coefficients(component, p: StripPoint) -> tuple[float, float, float]:
    """(exponent, cos coefficient, sin coefficient) of the claimed term."""
    component = Component(component)
    a, b = p.a, p.b
    q = a * a - a - b * b
    if component is Component.R1:
        return 1.0 - a, q, (1.0 - 2.0 * a) * b
    if component is Component.R2:
        return a, q, (2.0 * a - 1.0) * b
    if component is Component.I1:
        return 1.0 - a, (1.0 - 2.0 * a) * b, -a * a + a + b * b
    return a, (1.0 - 2.0 * a) * b, q


def oscillation_term(component, p: StripPoint, N):
    """T(N) for one component, evaluated literally (scalar or array N)."""
    alpha, c_cos, c_sin = oscillation_coefficients(component, p)
    n = np.asarray(N, dtype=float)
    if np.any(n < 1.0):
        raise PreconditionError("oscillation terms are sampled for N >= 1")
    phase = p.b * np.log(n)
    out = n ** alpha * (c_cos * np.cos(phase) + c_sin * np.sin(phase))
    return float(out) if out.ndim == 0 else out


def peak_phase(component, p: StripPoint) -> float:
    """Phase phi in [0, 2 pi) maximising |c1 cos phi + c2 sin phi|."""
    _, c_cos, c_sin = oscillation_coefficients(component, p)
    return math.atan2(c_sin, c_cos) % (2.0 * math.pi)


def _numeric_peak_phase(term: TermFunction, b: float) -> float:
    # one period starting at ln N = 2 pi / b; coarse grid then bounded refinement
    def neg_abs(phi):
        return -abs(float(term(np.array([math.exp((2.0 * math.pi + phi) / b)]))[0]))

    grid = np.linspace(0.0, 2.0 * math.pi, 721)
    values = [neg_abs(phi) for phi in grid[:-1]]
    i = int(np.argmin(values))
    step = grid[1] - grid[0]
    lo, hi = max(0.0, grid[i] - step), min(2.0 * math.pi, grid[i] + step)
    res = optimize.minimize_scalar(neg_abs, bounds=(lo, hi), method="bounded",
                                   options={"xatol": 1e-12})
    return float(res.x) % (2.0 * math.pi)


@dataclass(frozen=True)
class OscillationSeries:
    component: str
    point: StripPoint
    samples: tuple[tuple[float, float], ...]
    envelope_exponent: float
    exponent_stderr: float
    intercept: float
    phase: float
    truncated: bool = False

    @property
    def significance(self) -> float:
        if self.exponent_stderr == 0.0:
            return math.copysign(math.inf, self.envelope_exponent)
        return self.envelope_exponent / self.exponent_stderr

    @property
    def diverges(self) -> bool:
        return self.envelope_exponent > 0 and self.significance >= SIGNIFICANCE

    @property
    def decays(self) -> bool:
        return self.envelope_exponent < 0 and -self.significance >= SIGNIFICANCE

    def envelope(self, N):
        return math.exp(self.intercept) * np.asarray(N, dtype=float) ** self.envelope_exponent

    def to_dict(self, include_samples: bool = True) -> dict:
        out = {
            "component": self.component,
            "a": self.point.a,
            "b": self.point.b,
            "envelope_exponent": self.envelope_exponent,
            "exponent_stderr": self.exponent_stderr,
            "significance": self.significance,
            "phase": self.phase,
            "n_samples": len(self.samples),
            "truncated": self.truncated,
        }
        if include_samples:
            out["samples"] = [[n, t] for n, t in self.samples]
        return out


def sample_oscillation(component, p: StripPoint, k_max: int = 40,
                       term: TermFunction | None = None) -> OscillationSeries:
    """Sample T on N_k = exp((2 pi k + phi*)/b), k = 1..k_max, and fit its growth.

    ``term`` replaces the claimed term with any callable of N (used for
    control experiments); its peak phase is then found numerically. Sampling
    stops early once N^max(a, 1-a) would pass 1e300.
    """
    if not p.b > 0:
        raise PreconditionError("sampling along the peak subsequence needs b > 0")
    if k_max < 8:
        raise PreconditionError("k_max must be at least 8")
    if term is None:
        label = Component(component).value
        phi = peak_phase(component, p)

        def term(n):
            return oscillation_term(label, p, n)
    else:
        label = str(component)
        phi = _numeric_peak_phase(term, p.b)

    growth = max(p.a, 1.0 - p.a)
    log_n = []
    for k in range(1, k_max + 1):
        ln = (2.0 * math.pi * k + phi) / p.b
        if growth * ln > _LOG_CAP or ln > 700.0:
            break
        log_n.append(ln)
    if len(log_n) < _MIN_SAMPLES:
        raise OverflowGuardError(
            f"overflow guard: only {len(log_n)} peak samples below N^{growth:.3g} <= 1e300")
    n = np.exp(np.array(log_n))
    t = np.asarray(term(n), dtype=float)
    if np.any(t == 0.0):
        raise PreconditionError("term vanishes on the peak subsequence; no envelope to fit")
    x, y = np.log(n), np.log(np.abs(t))
    fit = stats.linregress(x, y)
    # stderr from the residuals directly; linregress derives it from r, which
    # rounds to exactly 1 on a clean power law and reports 0
    resid = y - (fit.intercept + fit.slope * x)
    sxx = float(np.sum((x - x.mean()) ** 2))
    stderr = math.sqrt(float(np.sum(resid ** 2)) / (len(x) - 2) / sxx) if len(x) > 2 else math.inf
    return OscillationSeries(
        component=label,
        point=p,
        samples=tuple(zip(n.tolist(), t.tolist())),
        envelope_exponent=float(fit.slope),
        exponent_stderr=stderr,
        intercept=float(fit.intercept),
        phase=phi,
        truncated=len(log_n) < k_max,
    )


def limit_claim_audit(p: StripPoint, k_max: int = 40, term: TermFunction | None = None,
                      tolerance: float = 1e-6, step: str = "S9") -> StepVerdict:
    """Do the four boundary-term limits exist?

    NO_LIMIT when every fitted exponent is positive at >= 10 standard errors;
    HOLDS_NUMERICALLY when every series decays at that significance and its
    last sample is within ``tolerance`` of zero; CONDITIONAL otherwise. A
    custom ``term`` is applied to all four slots.
    """
    p.require_strip()
    if term is None:
        series = [sample_oscillation(c, p, k_max) for c in Component]
    else:
        series = [sample_oscillation(f"control:{c.value}", p, k_max, term) for c in Component]
    last = max(abs(s.samples[-1][1]) for s in series)
    if all(s.diverges for s in series):
        status = Status.NO_LIMIT
    elif all(s.decays for s in series) and last <= tolerance:
        status = Status.HOLDS_NUMERICALLY
    else:
        status = Status.CONDITIONAL
    evidence = {
        "tolerance": tolerance,
        "largest_final_sample": last,
        "significance_threshold": SIGNIFICANCE,
        "expected_exponents": {"R1": 1.0 - p.a, "I1": 1.0 - p.a, "R2": p.a, "I2": p.a},
        "series": [s.to_dict() for s in series],
    }
    residual = last if status is Status.HOLDS_NUMERICALLY else None
    return StepVerdict(step, status, residual, evidence)
