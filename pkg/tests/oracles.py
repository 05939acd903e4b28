"""Independent high-precision oracles used only by the tests."""
import math

import mpmath

mpmath.mp.dps = 40


def mp_s(s):
    return mpmath.mpc(complex(s).real, complex(s).imag)


def mp_interval(s, lo, hi, n):
    """int_lo^hi (x - n) x^(-s-1) dx from elementary antiderivatives."""
    s = mp_s(s)
    lo, hi, n = mpmath.mpf(lo), mpmath.mpf(hi), mpmath.mpf(n)
    first = (hi ** (1 - s) - lo ** (1 - s)) / (1 - s)
    second = (hi ** (-s) - lo ** (-s)) / (-s)
    return first - n * second


def mp_partial(s, X):
    """int_1^X {x} x^(-s-1) dx summed interval by interval in 40-digit arithmetic."""
    total = mpmath.mpc(0)
    top = math.floor(X)
    for n in range(1, top):
        total += mp_interval(s, n, n + 1, n)
    if X > top:
        total += mp_interval(s, top, X, top)
    return total


def mp_full(s):
    """int_1^inf {x} x^(-s-1) dx = 1/(s-1) - zeta(s)/s."""
    z = mp_s(s)
    return 1 / (z - 1) - mpmath.zeta(z) / z


def mp_tail(s, X):
    return complex(mp_full(s) - mp_partial(s, X))


def mp_zeta(s):
    return complex(mpmath.zeta(mp_s(s)))
