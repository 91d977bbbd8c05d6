"""Special-function oracles: mpmath arbitrary precision and frozen values."""

import math

import mpmath as mp
import numpy as np
import pytest

from fdosc import specfun
from fdosc.errors import ParameterError

mp.mp.dps = 40


def test_gamma_frozen_value():
    # mpmath, 40 digits
    ref = 0.15443097618696283 - 0.18052756337372855j
    assert abs(specfun.gamma(0.5 + 1.5j) - ref) < 1e-15


def test_gamma_against_mpmath_grid():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(300):
        z = complex(rng.uniform(-15, 15), rng.uniform(-15, 15))
        if abs(z.imag) < 5e-2 and abs(z.real - round(z.real)) < 5e-2:
            continue
        ref = complex(mp.gamma(mp.mpc(z.real, z.imag)))
        worst = max(worst, abs(specfun.gamma(z) - ref) / abs(ref))
    assert worst < 1e-12


def test_log_gamma_matches_mpmath_modulo_branch():
    # compare through exp so branch choices cannot differ
    for z in (0.25 - 2.0j, -3.3 + 0.7j, 4.2 + 0.1j, 0.9j):
        ref = complex(mp.gamma(mp.mpc(complex(z).real, complex(z).imag)))
        val = np.exp(specfun.log_gamma(z))
        assert abs(val - ref) / abs(ref) < 1e-13


def test_log_gamma_frozen_principal_value():
    ref = -2.393897330535136 + 1.0011752595176815j
    assert abs(specfun.log_gamma(0.25 - 2.0j) - ref) < 1e-13


def test_pochhammer_frozen():
    assert specfun.pochhammer(2.5, 3) == pytest.approx(39.375, abs=1e-13)
    assert specfun.pochhammer(1.3, 0) == 1.0


def test_laguerre_frozen_and_direct_sum():
    # L_3^{0.7}(1.25) = -0.8481458333333334 (mpmath)
    assert specfun.laguerre(3, 0.7, 1.25) == pytest.approx(
        -0.8481458333333334, abs=1e-14)
    # direct binomial-sum oracle
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(0, 7))
        d = rng.uniform(0.1, 2.0)
        y = rng.uniform(0.0, 5.0)
        ref = sum((-1) ** k * math.gamma(n + d + 1)
                  / (math.gamma(d + k + 1) * math.factorial(n - k))
                  * y ** k / math.factorial(k) for k in range(n + 1))
        assert specfun.laguerre(n, d, y) == pytest.approx(ref, rel=1e-11, abs=1e-11)


def test_laguerre_coefficients_consistent_with_evaluation():
    coeffs = specfun.laguerre_coefficients(4, 0.7)
    y = 1.37
    horner = 0.0
    for c in reversed(coeffs):
        horner = horner * y + c
    assert horner == pytest.approx(specfun.laguerre(4, 0.7, y), rel=1e-12)


def test_cdhahn_hand_expanded_degree_one():
    # S_1(x^2; a,b,c) = (a+b)(a+c) - (a^2 + x^2)
    for (x, a, b, c) in [(1.3, 0.7, 1.1, 0.4), (0.2, 1.5, 0.9, 2.0)]:
        ref = (a + b) * (a + c) - (a * a + x * x)
        assert specfun.cdhahn(1, x, a, b, c) == pytest.approx(ref, rel=1e-13)


def test_cdhahn_frozen_values():
    # terminating series summed at 40 digits
    assert specfun.cdhahn(2, 1.3, 0.7, 1.1, 0.4) == pytest.approx(-4.01, abs=1e-11)
    assert specfun.cdhahn(3, 1.3, 0.7, 1.1, 0.4) == pytest.approx(-52.666, abs=1e-9)


def test_cdhahn_against_mpmath_sum():
    rng = np.random.default_rng(5)

    def oracle(n, x, a, b, c):
        s = mp.mpf(0)
        for k in range(n + 1):
            s += (mp.rf(-n, k) * mp.rf(mp.mpc(a, x), k) * mp.rf(mp.mpc(a, -x), k)
                  / (mp.rf(a + b, k) * mp.rf(a + c, k) * mp.factorial(k)))
        return complex(mp.rf(a + b, n) * mp.rf(a + c, n) * s).real

    for _ in range(40):
        n = int(rng.integers(0, 6))
        x = rng.uniform(0.0, 4.0)
        a, b, c = rng.uniform(0.2, 2.5, size=3)
        ref = oracle(n, x, a, b, c)
        assert specfun.cdhahn(n, x, a, b, c) == pytest.approx(
            ref, rel=1e-11, abs=1e-11)


def test_cdhahn_degree_zero_is_one():
    assert specfun.cdhahn(0, 2.2, 0.5, 1.0, 1.5) == 1.0


def test_cdhahn_rejects_vanishing_denominator():
    with pytest.raises(ParameterError):
        specfun.cdhahn(3, 1.0, 1.0, -1.0, 0.5)


def test_generalized_degree_integer_is_shift_product():
    rho = 1.7
    assert specfun.generalized_degree(rho, 0) == pytest.approx(1.0)
    assert abs(specfun.generalized_degree(rho, 3)
               - rho * (rho + 1j) * (rho + 2j)) < 1e-13


def test_generalized_degree_frozen_noninteger():
    ref = 3.0105584638825578 + 4.931334660336703j
    assert abs(specfun.generalized_degree(1.7, 2.6) - ref) < 1e-12


def test_generalized_degree_gamma_ratio_recurrence():
    rng = np.random.default_rng(3)
    for _ in range(100):
        rho = rng.uniform(0.1, 5.0)
        lam = rng.uniform(-1.5, 2.5)
        lhs = specfun.generalized_degree(rho, lam + 1)
        rhs = specfun.generalized_degree(rho, lam) * 1j * (lam - 1j * rho)
        assert abs(lhs - rhs) < 1e-12 * (1.0 + abs(rhs))
