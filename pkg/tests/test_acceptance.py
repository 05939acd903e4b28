"""The nine acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line (also collected in the
terminal summary) before asserting.
"""
import json
import math
import time

import numpy as np

from zeta_audit import (
    StripPoint,
    find_zeros,
    improper_sawtooth_integral,
    reference_zeta,
    zeta_integral,
)
from zeta_audit.cli import main
from zeta_audit.kernels import KERNEL_IDS, Component, kernel_derivative_check
from zeta_audit.proof_audit import (
    ALGEBRA_STEPS,
    Status,
    algebraic_step_check,
    component_residual,
    functional_equation_check,
    functional_factor,
    ibp_measure,
    limit_claim_audit,
    sample_oscillation,
)

TOLERANCE = 1e-6
P0 = StripPoint(0.5, 14.134725)


def test_c1_oracle_equivalence(criterion):
    start = time.perf_counter()
    worst = 0.0
    for a in (0.25, 0.5, 0.75):
        for b in (0.5, 5.0, 14.134725, 30.0):
            s = complex(a, b)
            worst = max(worst, abs(zeta_integral(s).value - reference_zeta(s)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-8 and elapsed < 60
    criterion(1, ok, f"max |integral - reference| = {worst:.3e} (<= 1e-8), {elapsed:.2f} s (< 60 s)")
    assert ok


def test_c2_basel(criterion):
    zeta_err = abs(zeta_integral(2).value - math.pi ** 2 / 6)
    saw_err = abs(improper_sawtooth_integral(2).value - (1 - math.pi ** 2 / 12))
    ok = zeta_err <= 1e-9 and saw_err <= 1e-9
    criterion(2, ok, f"zeta(2) err {zeta_err:.3e}, sawtooth(2) err {saw_err:.3e} (<= 1e-9)")
    assert ok


def test_c3_antiderivatives(criterion):
    xs = np.geomspace(1.1, 100.0, 60)
    worst = {}
    for p in (StripPoint(0.5, 14.134725), StripPoint(0.25, 30.0)):
        for kid in KERNEL_IDS:
            report = kernel_derivative_check(kid, p, xs)
            worst[kid] = max(worst.get(kid, 0.0), report.max_relative_error)
    failing = {k: v for k, v in worst.items() if v > 1e-6}
    ok = not failing
    detail = f"max relative error {max(worst.values()):.3e} over 8 kernels (<= 1e-6)"
    if failing:
        detail += f"; failing {failing}"
    criterion(3, ok, detail)
    assert ok


def test_c4_functional_equation(criterion):
    points = [0.3 + 5j, 0.5 + 14.134725j, 0.1 + 0.5j, 0.75 + 30j, 0.25 + 49j]
    worst = max(functional_equation_check(s) for s in points)
    g_half = abs(functional_factor(0.5) - 1)
    ok = worst <= 1e-7 and g_half <= 1e-12
    criterion(4, ok, f"max residual {worst:.3e} at 5 points (<= 1e-7), |G(1/2) - 1| = {g_half:.1e}")
    assert ok


def test_c5_zero_finding(criterion):
    start = time.perf_counter()
    zeros = find_zeros(0.0, 30.0)
    elapsed = time.perf_counter() - start
    width = max(z.width for z in zeros)
    agreement = max(z.agreement for z in zeros)
    mirror = max(abs(zeta_integral(1 - z.s).value) for z in zeros)
    ok = (len(zeros) == 3 and width <= 1e-9 and agreement <= 1e-6 and mirror <= 1e-6
          and elapsed < 120)
    criterion(5, ok, f"{len(zeros)} zeros, width {width:.2e}, agreement {agreement:.2e}, "
                     f"|zeta(1-s0)| {mirror:.2e}, {elapsed:.2f} s")
    assert ok


def test_c6_zero_identity_residuals(criterion, first_zero, control_point):
    at_zero = max(component_residual(c, first_zero) for c in Component)
    s = control_point.s
    here = reference_zeta(s) / s
    mirror = complex(1 - control_point.a, -control_point.b)
    there = reference_zeta(mirror) / mirror
    expected = {Component.R1: abs(here.real), Component.I1: abs(here.imag),
                Component.R2: abs(there.real), Component.I2: abs(there.imag)}
    mismatch = max(abs(component_residual(c, control_point) - expected[c]) for c in Component)
    ok = at_zero <= 1e-6 and mismatch <= 1e-8
    criterion(6, ok, f"max residual at zero {at_zero:.3e} (<= 1e-6), "
                     f"control mismatch {mismatch:.3e} (<= 1e-8)")
    assert ok


def test_c7_ibp_reconciliation(criterion, first_zero):
    reconciled = 0.0
    bracket_at_1000 = math.inf
    for c in Component:
        for N in (10.0, 100.5, 1000.0):
            m = ibp_measure(c, first_zero, N)
            reconciled = max(reconciled, m.reconciled_residual)
            if N == 1000.0:
                bracket_at_1000 = min(bracket_at_1000, m.bracket_only_residual)
    ok = reconciled <= 1e-8 and bracket_at_1000 > 1e3 * TOLERANCE
    criterion(7, ok, f"max |Q-B-C| {reconciled:.3e} (<= 1e-8), min |Q-B| at N=1000 "
                     f"{bracket_at_1000:.3e} (> {1e3 * TOLERANCE:.0e})")
    assert ok


def test_c8_limit_audit(criterion):
    errors = {}
    for c in Component:
        series = sample_oscillation(c, P0, 40)
        want = P0.a if c.mirrored else 1 - P0.a
        errors[c.value] = abs(series.envelope_exponent - want)
    verdict = limit_claim_audit(P0, 40)
    control = limit_claim_audit(P0, 40, term=lambda n: n ** -P0.a * np.cos(P0.b * np.log(n)))
    ok = (max(errors.values()) <= 0.02 and verdict.status is Status.NO_LIMIT
          and control.status is not Status.NO_LIMIT)
    criterion(8, ok, f"max exponent error {max(errors.values()):.2e} (<= 0.02), "
                     f"verdict {verdict.status.value}, control {control.status.value}")
    assert ok


def test_c9_determinism(criterion, tmp_path):
    outputs = []
    for i in range(2):
        path = tmp_path / f"audit{i}.json"
        assert main(["audit", "--zero", "1", "--out", str(path)]) == 0
        outputs.append(path.read_bytes())
    same_report = outputs[0] == outputs[1]
    json.loads(outputs[0])
    names = ALGEBRA_STEPS + ("conclude-half", "half-probe", "full-chain")
    runs = [[json.dumps(algebraic_step_check(n, 200, seed=42).to_dict()) for n in names]
            for _ in range(3)]
    same_algebra = runs[0] == runs[1] == runs[2]
    ok = same_report and same_algebra
    criterion(9, ok, f"audit JSON byte-identical: {same_report}; algebra verdicts and "
                     f"counterexamples identical over 3 runs: {same_algebra}")
    assert ok
