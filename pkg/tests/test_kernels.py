import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from zeta_audit import DomainError, PreconditionError, StripPoint
from zeta_audit.kernels import (
    KERNEL_IDS,
    Component,
    kernel_derivative_check,
    kernel_envelope,
    kernel_integrand,
    kernel_value,
)

P0 = StripPoint(0.5, 14.134725)
AUDIT_POINTS = [P0, StripPoint(0.25, 14.134725), StripPoint(0.75, 5.0), StripPoint(0.3, 30.0)]
XS = np.geomspace(1.1, 100.0, 25)


def log_quad(f, x):
    """int_1^x f, substituting x = e^u so the oscillation is uniform."""
    value, _ = integrate.quad(lambda u: f(math.exp(u)) * math.exp(u), 0.0, math.log(x),
                              limit=400, epsabs=1e-12, epsrel=1e-11)
    return value


def test_integrand_at_one():
    assert kernel_integrand("R1_v", P0, 1.0) == 1.0
    assert kernel_integrand("I1_v", P0, 1.0) == 0.0


def test_integrand_phase_flip():
    x = math.exp(math.pi / P0.b)
    assert kernel_integrand("R2_v", P0, x) == pytest.approx(-(x ** (P0.a - 2)), rel=1e-12)


def test_integrand_rejects_second_antiderivatives():
    with pytest.raises(DomainError):
        kernel_integrand("R1_V", P0, 2.0)


@pytest.mark.parametrize("p", AUDIT_POINTS)
def test_values_at_one(p):
    a, b = p.a, p.b
    assert kernel_value("R1_v", p, 1.0) == pytest.approx(-a / (a * a + b * b), rel=1e-14)
    assert kernel_value("I1_v", p, 1.0) == pytest.approx(-b / (a * a + b * b), rel=1e-14)
    assert kernel_value("I2_v", p, 1.0) == pytest.approx(-b / ((a - 1) ** 2 + b * b), rel=1e-14)


def test_vanishing_denominator_is_named():
    with pytest.raises(DomainError, match=r"a\^2\+b\^2"):
        kernel_value("R1_v", StripPoint(0.0, 0.0), 2.0)


def test_x_below_one_rejected():
    with pytest.raises(DomainError):
        kernel_value("R1_v", P0, 0.5)


def test_vectorised_matches_scalar():
    values = kernel_value("I2_V", P0, XS)
    assert np.array_equal(values, np.array([kernel_value("I2_V", P0, x) for x in XS]))


@pytest.mark.parametrize("kernel_id", KERNEL_IDS)
@pytest.mark.parametrize("p", AUDIT_POINTS)
def test_derivative_checks_pass(kernel_id, p):
    report = kernel_derivative_check(kernel_id, p, XS)
    assert report.passed, report.to_dict()
    assert report.max_relative_error <= 1e-6


def test_small_grid_for_r1_and_r2():
    assert kernel_derivative_check("R1_v", P0, [1.5, 2, 10]).max_relative_error <= 1e-6
    assert kernel_derivative_check("R2_V", P0, [1.5, 2, 10]).max_relative_error <= 1e-6


def test_degenerate_probe_rejected():
    with pytest.raises(PreconditionError):
        kernel_derivative_check("R1_v", StripPoint(0.5, 0.0), [2.0])


def test_wrong_kernel_is_reported_not_raised():
    # a kernel with a flipped sin coefficient must fail its own check
    from zeta_audit import kernels

    original = kernels._CLOSED_FORMS["R1_v"]
    try:
        kernels._CLOSED_FORMS["R1_v"] = lambda a, b: kernels._Form(
            1.0, -a, -a, -b, (("a^2+b^2", a * a + b * b),))
        report = kernel_derivative_check("R1_v", P0, XS)
    finally:
        kernels._CLOSED_FORMS["R1_v"] = original
    assert not report.passed
    assert report.max_relative_error > 0.1


@pytest.mark.parametrize("component", list(Component))
@pytest.mark.parametrize("p", AUDIT_POINTS[:2])
def test_first_antiderivative_against_quadrature(component, p):
    # independent oracle: integrate the integrand with adaptive quadrature
    x = 7.3
    f = lambda t: kernel_integrand(component, p, t)
    want = log_quad(f, x)
    v_id = f"{component.value}_v"
    assert kernel_value(v_id, p, x) - kernel_value(v_id, p, 1.0) == pytest.approx(want, abs=1e-10)


@pytest.mark.parametrize("component", list(Component))
def test_second_antiderivative_against_quadrature(component):
    x = 12.5
    v_id, V_id = f"{component.value}_v", f"{component.value}_V"
    want = log_quad(lambda t: kernel_value(v_id, P0, t), x)
    assert kernel_value(V_id, P0, x) - kernel_value(V_id, P0, 1.0) == pytest.approx(want, abs=1e-10)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.01, 0.99), st.floats(0.1, 50), st.floats(1.0, 1e4))
def test_r1_envelope_bound(a, b, x):
    p = StripPoint(a, b)
    bound = x ** -a * math.sqrt(a * a + b * b) / (a * a + b * b)
    assert abs(kernel_value("R1_v", p, x)) <= bound * (1 + 1e-12)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(KERNEL_IDS), st.floats(0.01, 0.99), st.floats(0.1, 50), st.floats(1.0, 1e4))
def test_envelope_dominates_every_kernel(kernel_id, a, b, x):
    p = StripPoint(a, b)
    assert abs(kernel_value(kernel_id, p, x)) <= kernel_envelope(kernel_id, p, x) * (1 + 1e-12)
