import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate

from oracles import mp_partial, mp_tail, mp_zeta
from zeta_audit import (
    DomainError,
    PoleError,
    PreconditionError,
    StripPoint,
    ToleranceUnreachableError,
    improper_sawtooth_integral,
    sawtooth_integral,
    sawtooth_moment,
    tail_estimate,
    zeta_integral,
)

S0 = complex(0.5, 14.134725)


def quad_complex(f, lo, hi):
    re = integrate.quad(lambda x: f(x).real, lo, hi, epsabs=1e-15, epsrel=1e-13, limit=200)[0]
    im = integrate.quad(lambda x: f(x).imag, lo, hi, epsabs=1e-15, epsrel=1e-13, limit=200)[0]
    return complex(re, im)


class TestStripPoint:
    def test_mirror_keeps_height(self):
        assert StripPoint(0.3, 5.0).mirror() == StripPoint(0.7, 5.0)

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (1.0, 1.0), (0.5, 0.0), (0.5, -1.0)])
    def test_outside_strip(self, a, b):
        with pytest.raises(PreconditionError):
            StripPoint(a, b).require_strip()

    def test_non_finite(self):
        with pytest.raises(DomainError):
            StripPoint(float("nan"), 1.0)


class TestMoment:
    def test_elementary(self):
        assert sawtooth_moment(1, 2) == pytest.approx(0.125, abs=1e-16)

    def test_against_quadrature(self):
        want = quad_complex(lambda x: (x - 3) * x ** (-S0 - 1), 3, 4)
        assert abs(sawtooth_moment(3, S0) - want) <= 1e-12

    @pytest.mark.parametrize("s", [0, 1])
    def test_vanishing_denominators(self, s):
        with pytest.raises(DomainError):
            sawtooth_moment(2, s)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 10 ** 6), st.floats(0.01, 0.99), st.floats(-50, 50))
    def test_matches_elementary_oracle(self, n, a, b):
        from oracles import mp_interval

        s = complex(a, b)
        want = complex(mp_interval(s, n, n + 1, n))
        assert abs(sawtooth_moment(n, s) - want) <= 1e-13 * abs(want)


class TestSawtoothIntegral:
    def test_empty_range(self):
        assert sawtooth_integral(S0, 1.0) == 0

    def test_basel_rearrangement(self):
        assert abs(sawtooth_integral(2, 1e6) - (1 - math.pi ** 2 / 12)) < 1e-9

    def test_against_oracle_at_1000(self):
        assert abs(sawtooth_integral(S0, 1000) - complex(mp_partial(S0, 1000))) <= 1e-12

    def test_partial_last_interval(self):
        assert abs(sawtooth_integral(S0, 100.5) - complex(mp_partial(S0, 100.5))) <= 1e-13

    def test_brute_force_quadrature(self):
        want = sum(quad_complex(lambda x, n=n: (x - n) * x ** (-S0 - 1), n, n + 1) for n in range(1, 40))
        assert abs(sawtooth_integral(S0, 40) - want) <= 1e-11

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.05, 0.95), st.floats(0.0, 50.0), st.floats(1.0, 3000.0), st.floats(1.0, 3000.0))
    def test_interval_additivity(self, a, b, x1, x2):
        s = complex(a, b)
        lo, hi = sorted((x1, x2))
        direct = complex(mp_partial(s, hi) - mp_partial(s, lo))
        assert abs(sawtooth_integral(s, hi) - sawtooth_integral(s, lo) - direct) <= 1e-12


class TestTail:
    def test_mean_part_at_s2(self):
        # {x} = 1/2 + periodic part; at integer X the mean part is X^-2/4
        value, bound = tail_estimate(2, 100, order=0)
        assert value == pytest.approx(2.5e-5, rel=1e-14)
        assert abs(mp_tail(2, 100) - value) <= bound

    @pytest.mark.parametrize("order", [0, 1, 2, 4, 6])
    @pytest.mark.parametrize("s,X", [(2, 100), (S0, 1e4), (S0, 37.25), (0.25 + 30j, 500.5), (0.9 + 0.5j, 16)])
    def test_bound_dominates_error(self, order, s, X):
        value, bound = tail_estimate(s, X, order)
        assert abs(mp_tail(s, X) - value) <= bound

    def test_higher_order_is_tighter(self):
        bounds = [tail_estimate(S0, 1e4, order)[1] for order in range(5)]
        assert all(b2 < b1 for b1, b2 in zip(bounds, bounds[1:]))

    def test_rejects_bad_cutoff(self):
        with pytest.raises(DomainError):
            tail_estimate(S0, 0.5)


class TestZetaIntegral:
    def test_basel(self):
        assert abs(zeta_integral(2).value - math.pi ** 2 / 6) < 1e-9

    def test_half(self):
        assert abs(zeta_integral(0.5).value - (-1.4603545088095868)) < 1e-8

    def test_near_first_zero(self):
        result = zeta_integral(S0)
        assert abs(result.value) <= 1e-6
        assert result.tail_bound <= 1e-10

    def test_pole(self):
        with pytest.raises(PoleError, match="pole at s = 1"):
            zeta_integral(1)

    def test_pole_residue(self):
        s = 1 + 1e-6
        assert abs((s - 1) * zeta_integral(s).value - 1) < 1e-4

    def test_tolerance_floor(self):
        with pytest.raises(ValueError):
            zeta_integral(2, 1e-12)

    def test_unreachable_tolerance_reports_bound(self):
        with pytest.raises(ToleranceUnreachableError, match="cutoff cap") as info:
            zeta_integral(0.05 + 50j, 1e-10, order=0)
        assert info.value.achieved_bound > 1e-10

    def test_improper_integral_matches_oracle(self):
        from oracles import mp_full

        result = improper_sawtooth_integral(S0)
        assert abs(result.value - complex(mp_full(S0))) <= result.tail_bound + 1e-14

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.02, 0.98), st.floats(0.0, 50.0))
    def test_oracle_equivalence(self, a, b):
        s = complex(a, b)
        result = zeta_integral(s)
        # the bound covers truncation; the floor covers rounding in the interval sum
        assert abs(result.value - mp_zeta(s)) <= 2 * result.tail_bound + 1e-11

    @settings(max_examples=30, deadline=None)
    @given(st.floats(0.02, 2.0), st.floats(0.1, 50.0))
    def test_conjugate_symmetry(self, a, b):
        s = complex(a, b)
        up, down = zeta_integral(s).value, zeta_integral(s.conjugate()).value
        assert abs(up - down.conjugate()) <= 1e-12 * max(1.0, abs(up))
