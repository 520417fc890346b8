import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss

from cmlog.density import T0, rho
from cmlog.quad import (
    GAUSS_WEIGHTS,
    KRONROD_WEIGHTS,
    NODES,
    QuadratureResult,
    TailSpec,
    integrate_against_rho,
    integrate_finite,
    integrate_log_endpoint,
    integrate_semi_infinite,
)


def test_kronrod_rule_exact_to_degree_31():
    for d in range(32):
        exact = 0.0 if d % 2 else 2.0 / (d + 1)
        assert KRONROD_WEIGHTS @ NODES ** d == pytest.approx(exact, abs=1e-14)


def test_embedded_gauss_rule_matches_legendre():
    x, w = leggauss(10)
    mask = GAUSS_WEIGHTS > 0
    np.testing.assert_allclose(NODES[mask], np.sort(x), atol=1e-15)
    np.testing.assert_allclose(GAUSS_WEIGHTS[mask], w, atol=1e-15)


# (integrand, a, b, exact)
FINITE_FAMILY = [
    (lambda x: x, 0.0, 1.0, 0.5),
    (np.log, 0.0, 1.0, -1.0),
    # antiderivative t^2/2 (ln^2 t - ln t + 1/2) at 1 and 2
    (lambda t: t * np.log(t) ** 2, 1.0, 2.0,
     2 * math.log(2) ** 2 - 2 * math.log(2) + 0.75),
]


@pytest.mark.parametrize("f,a,b,exact", FINITE_FAMILY)
def test_integrate_finite_family(f, a, b, exact):
    res = integrate_finite(f, a, b, tol=1e-10)
    assert res.converged
    assert res.evaluations > 0
    assert res.value == pytest.approx(exact, abs=1e-10)
    # error estimate honesty
    assert abs(res.value - exact) <= 10 * max(res.abs_error_estimate, 1e-16)


def test_log_antiderivative_value():
    assert FINITE_FAMILY[2][3] == pytest.approx(0.324612, abs=5e-7)


@pytest.mark.parametrize("f,a,b,exact", FINITE_FAMILY)
def test_halving_tol_does_not_increase_error(f, a, b, exact):
    errs = [abs(integrate_finite(f, a, b, tol=t).value - exact) for t in (1e-4, 5e-5, 1e-6, 5e-7)]
    for coarse, fine in zip(errs, errs[1:]):
        assert fine <= max(coarse, 1e-14)


def test_log_endpoint_rule():
    res = integrate_log_endpoint(np.log, 0.0, 1.0, 1e-12)
    assert res.converged and res.value == pytest.approx(-1.0, abs=1e-12)
    # singular at the right end: int_0^1 log(1 - t) dt = -1
    res = integrate_log_endpoint(lambda t: np.log1p(-t), 0.0, 1.0, 1e-12, singular="right")
    assert res.value == pytest.approx(-1.0, abs=1e-12)


@pytest.mark.parametrize("f,rate,exact", [
    (lambda t: np.exp(-t), 1.0, 1.0),
    (lambda t: np.exp(-2 * t), 2.0, 0.5),
])
def test_semi_infinite_exponential(f, rate, exact):
    res = integrate_semi_infinite(f, 0.0, 1e-12, TailSpec.exponential(rate))
    assert res.converged
    assert res.value == pytest.approx(exact, abs=1e-12)


def test_semi_infinite_log_squared_tail():
    # int_2^inf dt / ((t-1)(log^2(t-1) + pi^2)) = (1/pi) int_0^inf dx/(1+x^2) = 1/2
    def f(t):
        return 1.0 / ((t - 1) * (np.log(t - 1) ** 2 + math.pi ** 2))
    res = integrate_semi_infinite(f, 2.0, 1e-10, TailSpec.log_squared_reciprocal())
    assert res.converged
    assert res.value == pytest.approx(0.5, abs=1e-10)
    assert abs(res.value - 0.5) <= 10 * res.abs_error_estimate + 1e-15


def test_semi_infinite_generic():
    res = integrate_semi_infinite(lambda t: 1.0 / (1.0 + t * t), 0.0, 1e-10)
    assert res.value == pytest.approx(math.pi / 2, abs=1e-9)


def test_tailspec_validation():
    with pytest.raises(ValueError):
        TailSpec("gaussian")
    with pytest.raises(ValueError):
        TailSpec.exponential(0.0)


def test_nonconvergence_is_flagged_not_raised():
    res = integrate_finite(lambda x: np.sin(1.0 / x) / x, 0.0, 1.0, tol=1e-14, budget=500)
    assert not res.converged
    assert math.isfinite(res.value)


def test_result_addition():
    a = QuadratureResult(1.0, 1e-3, 10, True)
    b = QuadratureResult(2.0, 2e-3, 5, False)
    c = a + b
    assert (c.value, c.evaluations, c.converged) == (3.0, 15, False)
    assert c.abs_error_estimate == pytest.approx(3e-3)


def test_against_rho_constant_kernel_is_one_half():
    # int_0^inf rho = lim x (1 - G(x)) = 1/2 exactly (see test_density)
    res = integrate_against_rho(np.ones_like, 1e-12)
    assert res.converged
    assert res.value == pytest.approx(0.5, abs=1e-11)


def test_against_rho_zero_rate_exponential_same_as_constant():
    a = integrate_against_rho(np.ones_like, 1e-10).value
    b = integrate_against_rho(lambda t: np.exp(-0.0 * t), 1e-10).value
    assert a == b


def test_against_rho_derivative_kernel_matches_g_prime():
    from cmlog.cutplane import eval_g_prime_direct
    res = integrate_against_rho(lambda t: 1.0 / (1.0 + t) ** 2, 1e-12)
    assert res.value > 0
    assert res.value == pytest.approx(eval_g_prime_direct(1.0).real, abs=1e-10)


def test_split_point_independence():
    tol = 1e-10
    whole = integrate_against_rho(np.ones_like, tol).value
    p01 = integrate_finite(rho, 1e-300, 1.0, tol)
    p01 = integrate_log_endpoint(rho, 0.0, 1.0, tol)
    p12 = integrate_log_endpoint(rho, 1.0, 2.0, tol)
    p2 = integrate_semi_infinite(rho, 2.0, tol, TailSpec.log_squared_reciprocal())
    assert whole == pytest.approx(p01.value + p12.value + p2.value, abs=2 * 3 * tol)


def test_mass_far_from_origin_is_found():
    # exp(-s t) rho(t) for huge s lives at t ~ 1/s; phi(s) ~ 2 (ln s + euler_gamma)/s
    s = 1e6
    res = integrate_against_rho(lambda t: np.exp(-s * t), 1e-14, 1e-10)
    assert res.value == pytest.approx(2 * (math.log(s) + np.euler_gamma) / s, rel=1e-5)
