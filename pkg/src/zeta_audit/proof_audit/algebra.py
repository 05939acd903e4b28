"""Algebraic rearrangements checked as implications over free variables.

The limits lim cos(b ln N), lim sin(b ln N), 1/lim N^(1-a) and 1/lim N^a are
replaced by free finite unknowns C, S, W1, W2. Every relation in the chain is
affine in v = (C, S, W1, W2) once a and b are fixed, so the premises of a step
can be solved exactly for a random point of their solution set and the
conclusion tested there. A step is an IDENTITY when no sampled point breaks it.

The limit-form premises are stored multiplied through by W, which is exact
only for W != 0; points with a vanishing W are therefore excluded. That is
also where the real limits live: N^a -> inf makes W1 = W2 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .verdicts import Status, StepVerdict

__all__ = [
    "Relation",
    "RELATIONS",
    "STEPS",
    "ALGEBRA_STEPS",
    "check_implication",
    "algebraic_step_check",
    "RELATIVE_TOLERANCE",
    "MIN_SAMPLES",
]

RELATIVE_TOLERANCE = 1e-9
MIN_SAMPLES = 100
_A_RANGE = (0.01, 0.99)
_B_RANGE = (0.1, 50.0)
_VARIABLES = ("C", "S", "W1", "W2")


@dataclass(frozen=True)
class Relation:
    """row . v + const = 0 with row, const depending on (a, b)."""

    name: str
    text: str
    form: Callable[[float, float], tuple[np.ndarray, float]]

    def residual(self, a: float, b: float, v: np.ndarray) -> tuple[float, float]:
        row, const = self.form(a, b)
        terms = row * v
        return float(terms.sum() + const), float(np.abs(terms).sum() + abs(const))


def _row(c=0.0, s=0.0, w1=0.0, w2=0.0) -> np.ndarray:
    return np.array([c, s, w1, w2], dtype=float)


def _q(a, b):
    return a * a - a - b * b


# cos/sin coefficient pairs of the four boundary brackets
def _x1(a, b):  # R1
    return _q(a, b), (1 - 2 * a) * b


def _x2(a, b):  # R2
    return _q(a, b), (2 * a - 1) * b


def _y1(a, b):  # I1: cos, sin
    return (1 - 2 * a) * b, -a * a + a + b * b


def _y2(a, b):  # I2: cos, sin
    return (1 - 2 * a) * b, _q(a, b)


def _k21(a, b):
    return a ** 3 - a ** 2 + a * b * b - b * b


def _k22(a, b):
    return b * (1 - 2 * a) - b * ((a - 1) ** 2 + b * b)


def _k24(a, b):
    return -a ** 3 + 2 * a * a - a * b * b - a


def _k25(a, b):
    return b * (a * a + b * b) + b * (1 - 2 * a)


def _limit_r1(a, b):
    c, s = _x1(a, b)
    return _row(c, s, w1=a ** 3 - 2 * a * a + a * b * b + a), 0.0


def _limit_r2(a, b):
    c, s = _x2(a, b)
    return _row(c, s, w2=-a ** 3 + a * a - a * b * b + b * b), 0.0


def _limit_i1(a, b):
    c, s = _y1(a, b)
    return _row(c, s, w1=-b * (a * a + b * b) - b * (1 - 2 * a)), 0.0


def _limit_i2(a, b):
    c, s = _y2(a, b)
    return _row(c, s, w2=-b * (1 - 2 * a) + b * ((a - 1) ** 2 + b * b)), 0.0


def _divide_r2(a, b):
    c, s = _x2(a, b)
    k = _k21(a, b)
    return _row(-c / k, -s / k, w2=1.0), 0.0


def _divide_i2(a, b):
    c, s = _y2(a, b)
    k = _k22(a, b)
    return _row(-c / k, -s / k, w2=1.0), 0.0


def _equate_r2_i2(a, b):
    xc, xs = _x2(a, b)
    yc, ys = _y2(a, b)
    k1, k2 = _k21(a, b), _k22(a, b)
    return _row(xc / k1 - yc / k2, xs / k1 - ys / k2), 0.0


def _divide_r1(a, b):
    c, s = _x1(a, b)
    k = _k24(a, b)
    return _row(-c / k, -s / k, w1=1.0), 0.0


def _divide_i1(a, b):
    c, s = _y1(a, b)
    k = _k25(a, b)
    return _row(-c / k, -s / k, w1=1.0), 0.0


def _equate_r1_i1(a, b):
    xc, xs = _x1(a, b)
    yc, ys = _y1(a, b)
    k1, k2 = _k24(a, b), _k25(a, b)
    return _row(xc / k1 - yc / k2, xs / k1 - ys / k2), 0.0


def _cos_from_r2_i2(a, b):
    return _row(1.0, -a / b), 0.0


def _cos_from_r1_i1(a, b):
    return _row(1.0, -(1 - a) / b), 0.0


def _half(a, b):
    return _row(), a - 0.5


def _half_times_sin(a, b):
    return _row(s=a - 0.5), 0.0


RELATIONS: dict[str, Relation] = {r.name: r for r in (
    Relation("limit-r1", "X1(C,S) / W1 + (a^3 - 2a^2 + ab^2 + a) = 0", _limit_r1),
    Relation("limit-r2", "X2(C,S) / W2 - a^3 + a^2 - ab^2 + b^2 = 0", _limit_r2),
    Relation("limit-i1", "Y1(C,S) / W1 - b(a^2+b^2) - b(1-2a) = 0", _limit_i1),
    Relation("limit-i2", "Y2(C,S) / W2 - b(1-2a) + b((a-1)^2+b^2) = 0", _limit_i2),
    Relation("divide-r2", "W2 = X2 / (a^3 - a^2 + ab^2 - b^2)", _divide_r2),
    Relation("divide-i2", "W2 = Y2 / (b(1-2a) - b((a-1)^2+b^2))", _divide_i2),
    Relation("equate-r2-i2", "X2 / (a^3 - a^2 + ab^2 - b^2) = Y2 / (b(1-2a) - b((a-1)^2+b^2))",
             _equate_r2_i2),
    Relation("divide-r1", "W1 = X1 / (-a^3 + 2a^2 - ab^2 - a)", _divide_r1),
    Relation("divide-i1", "W1 = Y1 / (b(a^2+b^2) + b(1-2a))", _divide_i1),
    Relation("equate-r1-i1", "X1 / (-a^3 + 2a^2 - ab^2 - a) = Y1 / (b(a^2+b^2) + b(1-2a))",
             _equate_r1_i1),
    Relation("solve-cos-r2-i2", "C = (a/b) S", _cos_from_r2_i2),
    Relation("solve-cos-r1-i1", "C = ((1-a)/b) S", _cos_from_r1_i1),
    Relation("conclude-half", "a = 1/2", _half),
    Relation("half-times-sin", "(a - 1/2) S = 0", _half_times_sin),
)}

# step name -> (premises, conclusion)
STEPS: dict[str, tuple[tuple[str, ...], str]] = {
    "divide-r2": (("limit-r2",), "divide-r2"),
    "divide-i2": (("limit-i2",), "divide-i2"),
    "equate-r2-i2": (("divide-r2", "divide-i2"), "equate-r2-i2"),
    "divide-r1": (("limit-r1",), "divide-r1"),
    "divide-i1": (("limit-i1",), "divide-i1"),
    "equate-r1-i1": (("divide-r1", "divide-i1"), "equate-r1-i1"),
    "solve-cos-r2-i2": (("equate-r2-i2",), "solve-cos-r2-i2"),
    "solve-cos-r1-i1": (("equate-r1-i1",), "solve-cos-r1-i1"),
    "conclude-half": (("solve-cos-r2-i2", "solve-cos-r1-i1"), "conclude-half"),
    "half-probe": (("solve-cos-r2-i2", "solve-cos-r1-i1"), "half-times-sin"),
    "full-chain": (("limit-r1", "limit-r2", "limit-i1", "limit-i2"), "conclude-half"),
}

# the rearrangement steps, in the order they appear in the argument
ALGEBRA_STEPS = ("divide-r2", "divide-i2", "equate-r2-i2", "divide-r1", "divide-i1",
                 "equate-r1-i1", "solve-cos-r2-i2", "solve-cos-r1-i1")


def _sample_solution(rows: np.ndarray, consts: np.ndarray, rng: np.random.Generator):
    """Random point of {v : rows v + consts = 0}, or None if inconsistent."""
    if rows.size == 0:
        return rng.standard_normal(len(_VARIABLES))
    particular, *_ = np.linalg.lstsq(rows, -consts, rcond=None)
    scale = np.abs(rows).sum(axis=1) * max(1.0, np.abs(particular).max()) + np.abs(consts)
    if np.any(np.abs(rows @ particular + consts) > 1e-11 * np.maximum(scale, 1e-300)):
        return None
    _, sv, vt = np.linalg.svd(rows)
    rank = int((sv > 1e-12 * sv.max()).sum()) if sv.size else 0
    null = vt[rank:]
    z = rng.standard_normal(null.shape[0])
    return particular + z @ null


def check_implication(premises, conclusion, sample_count: int = 200, seed: int = 42,
                      step: str = "implication") -> StepVerdict:
    """Test premises => conclusion at random (a, b) in the strip.

    (a, b) is drawn uniformly from (0.01, 0.99) x (0.1, 50), which avoids
    every excluded factor (b = 0, (a-1)(a^2+b^2) = 0, a((a-1)^2+b^2) = 0).
    Points with W1 = 0 or W2 = 0 are excluded as well. A sample whose premises
    admit no admissible point is vacuous and does not count either way.
    """
    if sample_count < MIN_SAMPLES:
        raise ValueError(f"sample_count must be >= {MIN_SAMPLES}")
    premise_rel = [RELATIONS[name] for name in premises]
    target = RELATIONS[conclusion]
    rng = np.random.default_rng(seed)
    failures = 0
    vacuous = 0
    worst = 0.0
    counterexample = None
    for _ in range(sample_count):
        a = float(rng.uniform(*_A_RANGE))
        b = float(rng.uniform(*_B_RANGE))
        forms = [r.form(a, b) for r in premise_rel]
        rows = np.array([f[0] for f in forms]) if forms else np.zeros((0, 4))
        consts = np.array([f[1] for f in forms]) if forms else np.zeros(0)
        v = _sample_solution(rows, consts, rng)
        if v is None or min(abs(v[2]), abs(v[3])) <= 1e-12 * max(1.0, np.abs(v).max()):
            vacuous += 1
            continue
        res, scale = target.residual(a, b, v)
        rel = abs(res) / scale if scale > 0 else 0.0
        worst = max(worst, rel)
        if rel > RELATIVE_TOLERANCE:
            failures += 1
            if counterexample is None:
                counterexample = {"a": a, "b": b, **dict(zip(_VARIABLES, v.tolist())),
                                  "relative_residual": rel}
    checked = sample_count - vacuous
    if checked == 0:
        status = Status.CONDITIONAL
    elif failures:
        status = Status.NOT_IDENTITY
    else:
        status = Status.IDENTITY
    evidence = {
        "premises": [RELATIONS[n].text for n in premises],
        "conclusion": target.text,
        "sample_count": sample_count,
        "seed": seed,
        "checked": checked,
        "vacuous": vacuous,
        "failures": failures,
        "relative_tolerance": RELATIVE_TOLERANCE,
        "max_relative_residual": worst,
        "counterexample": counterexample,
        "excluded": ["b = 0", "(a-1)(a^2+b^2) = 0", "a((a-1)^2+b^2) = 0", "W1 = 0", "W2 = 0"],
    }
    return StepVerdict(step, status, worst if checked else None, evidence)


def algebraic_step_check(step: str, sample_count: int = 200, seed: int = 42) -> StepVerdict:
    """Verdict for one named rearrangement (see :data:`STEPS`)."""
    try:
        premises, conclusion = STEPS[step]
    except KeyError:
        raise ValueError(f"unknown algebraic step {step!r}; known: {sorted(STEPS)}") from None
    return check_implication(premises, conclusion, sample_count, seed, step=step)
