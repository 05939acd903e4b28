"""Closed-form antiderivatives used by the integration-by-parts argument.

Four components split the sawtooth integral at s = a + ib and at its mirror
1 - s into real trigonometric integrals:

    R1: cos(b ln x) / x^(1+a)      I1: sin(b ln x) / x^(1+a)
    R2: cos(b ln x) / x^(2-a)      I2: sin(b ln x) / x^(2-a)

For each there is a first antiderivative ``<C>_v`` (the ``v`` in
``int u v' = u v - int u' v``) and its own antiderivative ``<C>_V``. All
eight share the shape

    sign * x^power * (c_cos cos(b ln x) + c_sin sin(b ln x)) / prod(denominators)

and the coefficient tables below are kept exactly as claimed, signs included,
so a derivative check can flag any that are wrong instead of silently fixing
them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .errors import DomainError, PreconditionError
from .integral import StripPoint
from .numerics import finite_difference_derivative

__all__ = [
    "Component",
    "KERNEL_IDS",
    "kernel_integrand",
    "kernel_value",
    "kernel_envelope",
    "integrand_envelope",
    "kernel_derivative_check",
    "DerivativeReport",
]


class Component(str, Enum):
    R1 = "R1"
    I1 = "I1"
    R2 = "R2"
    I2 = "I2"

    @property
    def mirrored(self) -> bool:
        """True for the x^(2-a) pair, which comes from evaluating at 1 - s."""
        return self in (Component.R2, Component.I2)

    @property
    def trig(self) -> str:
        return "cos" if self in (Component.R1, Component.R2) else "sin"


KERNEL_IDS = ("R1_v", "R1_V", "R2_v", "R2_V", "I1_v", "I1_V", "I2_v", "I2_V")


@dataclass(frozen=True)
class _Form:
    sign: float
    power: float
    c_cos: float
    c_sin: float
    denominators: tuple[tuple[str, float], ...] = field(default=())


def _r1_v(a, b):
    return _Form(1.0, -a, -a, b, (("a^2+b^2", a * a + b * b),))


def _r1_V(a, b):
    return _Form(1.0, 1.0 - a, a * a - a - b * b, (1.0 - 2.0 * a) * b,
                 (("a^2+b^2", a * a + b * b), ("a^2-2a+b^2+1", a * a - 2.0 * a + b * b + 1.0)))


def _r2_v(a, b):
    return _Form(1.0, a - 1.0, a - 1.0, b, (("(a-1)^2+b^2", (a - 1.0) ** 2 + b * b),))


def _r2_V(a, b):
    return _Form(1.0, a, a * a - a - b * b, (2.0 * a - 1.0) * b,
                 (("a^2+b^2", a * a + b * b), ("a^2-2a+b^2+1", a * a - 2.0 * a + b * b + 1.0)))


def _i1_v(a, b):
    return _Form(-1.0, -a, b, a, (("a^2+b^2", a * a + b * b),))


def _i1_V(a, b):
    return _Form(-1.0, 1.0 - a, (1.0 - 2.0 * a) * b, -a * a + a + b * b,
                 (("a^2+b^2", a * a + b * b), ("a^2-2a+b^2+1", a * a - 2.0 * a + b * b + 1.0)))


def _i2_v(a, b):
    return _Form(1.0, a - 1.0, -b, a - 1.0, (("(a-1)^2+b^2", (a - 1.0) ** 2 + b * b),))


def _i2_V(a, b):
    return _Form(1.0, a, (1.0 - 2.0 * a) * b, a * a - a - b * b,
                 (("a^2+b^2", a * a + b * b), ("a^2-2a+b^2+1", a * a - 2.0 * a + b * b + 1.0)))


_CLOSED_FORMS: dict[str, Callable[[float, float], _Form]] = {
    "R1_v": _r1_v, "R1_V": _r1_V,
    "R2_v": _r2_v, "R2_V": _r2_V,
    "I1_v": _i1_v, "I1_V": _i1_V,
    "I2_v": _i2_v, "I2_V": _i2_V,
}


def _integrand_form(component: Component, a: float, b: float) -> _Form:
    power = a - 2.0 if component.mirrored else -1.0 - a
    if component.trig == "cos":
        return _Form(1.0, power, 1.0, 0.0)
    return _Form(1.0, power, 0.0, 1.0)


def _component_of(kernel_id) -> Component:
    name = kernel_id.value if isinstance(kernel_id, Component) else str(kernel_id)
    try:
        return Component(name.split("_")[0])
    except ValueError:
        raise DomainError(f"unknown kernel id {kernel_id!r}") from None


def _form_of(kernel_id: str, p: StripPoint) -> _Form:
    try:
        build = _CLOSED_FORMS[kernel_id]
    except KeyError:
        raise DomainError(f"unknown kernel id {kernel_id!r}") from None
    return build(p.a, p.b)


def _evaluate(form: _Form, b: float, x, *, check_denominators: bool = True):
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 1.0):
        raise DomainError("kernels are defined for x >= 1")
    denom = 1.0
    for name, value in form.denominators:
        if value == 0.0 and check_denominators:
            raise DomainError(f"vanishing denominator {name}")
        denom *= value
    phase = b * np.log(x_arr)
    out = form.sign * x_arr ** form.power * (
        form.c_cos * np.cos(phase) + form.c_sin * np.sin(phase)) / denom
    return float(out) if out.ndim == 0 else out


def kernel_integrand(kernel_id, p: StripPoint, x):
    """v'(x) for a component (accepts ``"R1"`` or ``"R1_v"``)."""
    if isinstance(kernel_id, str) and kernel_id.endswith("_V"):
        raise DomainError("integrands are defined for first-antiderivative ids only")
    component = _component_of(kernel_id)
    return _evaluate(_integrand_form(component, p.a, p.b), p.b, x)


def kernel_value(kernel_id: str, p: StripPoint, x):
    """The claimed closed form for ``kernel_id`` at ``x`` (scalar or array)."""
    return _evaluate(_form_of(kernel_id, p), p.b, x)


def _envelope(form: _Form, x):
    x_arr = np.asarray(x, dtype=float)
    denom = abs(math.prod(v for _, v in form.denominators)) if form.denominators else 1.0
    out = x_arr ** form.power * math.hypot(form.c_cos, form.c_sin) / denom
    return float(out) if out.ndim == 0 else out


def kernel_envelope(kernel_id: str, p: StripPoint, x):
    """Amplitude of the trigonometric combination: an upper bound on |kernel_value|."""
    return _envelope(_form_of(kernel_id, p), x)


def integrand_envelope(component, p: StripPoint, x):
    return _envelope(_integrand_form(_component_of(component), p.a, p.b), x)


@dataclass
class DerivativeReport:
    kernel_id: str
    point: StripPoint
    xs: list[float]
    numeric: list[float]
    target: list[float]
    relative_errors: list[float]
    tolerance: float

    @property
    def max_relative_error(self) -> float:
        return max(self.relative_errors) if self.relative_errors else 0.0

    @property
    def passed_each(self) -> list[bool]:
        return [e <= self.tolerance for e in self.relative_errors]

    @property
    def passed(self) -> bool:
        return all(self.passed_each)

    def to_dict(self) -> dict:
        return {
            "kernel": self.kernel_id,
            "a": self.point.a,
            "b": self.point.b,
            "max_relative_error": self.max_relative_error,
            "passed": self.passed,
        }


def _richardson_derivative(f, x: float) -> float:
    h = 1e-5 * max(1.0, abs(x))
    coarse = finite_difference_derivative(f, x, h)
    fine = finite_difference_derivative(f, x, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


def kernel_derivative_check(kernel_id: str, p: StripPoint, xs,
                            tolerance: float = 1e-6) -> DerivativeReport:
    """Differentiate ``kernel_value`` numerically and compare with its target.

    ``_v`` kernels are compared with the integrand, ``_V`` kernels with the
    matching ``_v`` kernel. Errors are relative to the target's envelope, so
    zero crossings of the oscillation do not inflate them. A failing kernel is
    reported, not raised.
    """
    p.require_strip()
    if kernel_id not in _CLOSED_FORMS:
        raise DomainError(f"unknown kernel id {kernel_id!r}")
    component = _component_of(kernel_id)
    first = kernel_id.endswith("_v")
    numeric, target, rel = [], [], []
    xs = [float(x) for x in xs]
    for x in xs:
        if x < 1.0 + 1e-5 * max(1.0, x):
            raise PreconditionError(f"x = {x} too close to 1 for a central difference")
        d = _richardson_derivative(lambda t: kernel_value(kernel_id, p, t), x)
        if first:
            want = kernel_integrand(component, p, x)
            scale = integrand_envelope(component, p, x)
        else:
            v_id = f"{component.value}_v"
            want = kernel_value(v_id, p, x)
            scale = kernel_envelope(v_id, p, x)
        numeric.append(d)
        target.append(want)
        rel.append(abs(d - want) / scale)
    return DerivativeReport(kernel_id, p, xs, numeric, target, rel, tolerance)
