import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmlog.cutplane import eval_g_boundary
from cmlog.density import T0, density_constants, rho, rho_asymptotic, rho_mutated
from cmlog.errors import DomainError


def test_examples():
    assert rho(1.0) == -1.0
    assert abs(rho(T0)) < 1e-15
    assert rho(0.5) == pytest.approx(0.5, abs=1e-15)
    assert rho(2.0) == pytest.approx(-2 * math.log(2) ** 2 / math.pi ** 2, rel=1e-15)


def test_t0_is_golden_conjugate():
    assert T0 == pytest.approx(0.6180339887, abs=1e-10)
    assert abs(T0 * T0 + T0 - 1) < 1e-15


def test_original_quotient_form_on_unit_interval():
    t = np.linspace(0.05, 0.95, 50)
    naive = -t * np.log((1 - t) / t ** 2) / np.log(1 - t)
    np.testing.assert_allclose(rho(t), naive, rtol=1e-12, atol=1e-14)


@pytest.mark.parametrize("bad", [0.0, -1.0])
def test_domain(bad):
    with pytest.raises(DomainError):
        rho(bad)


def test_sign_pattern():
    t = np.concatenate([np.geomspace(1e-12, T0 * (1 - 1e-9), 500),
                        np.geomspace(T0 * (1 + 1e-9), 1e12, 500)])
    r = rho(t)
    assert np.all(r[t < T0] > 0)
    assert np.all(r[t > T0] < 0)


def test_monotone_shape():
    left = rho(np.linspace(1e-9, 1 - 1e-9, 5000))
    right = rho(np.geomspace(1 + 1e-12, 1e12, 5000))
    assert np.all(np.diff(left) < 0)
    assert np.all(np.diff(right) > 0)
    assert right[-1] < 0


def test_continuity_at_one():
    for h in (1e-6, 1e-9, 1e-12):
        assert abs(rho(1 - h) + 1) < 10 * h
    # from the right the approach is only logarithmic: rho(1+h) + 1 ~ pi^2/log(h)^2
    for h in (1e-6, 1e-9, 1e-12):
        assert rho(1 + h) + 1 == pytest.approx(math.pi ** 2 / (math.log(h) ** 2 + math.pi ** 2),
                                               rel=1e-4)


def test_one_sided_derivatives_at_one():
    left = [(rho(1.0) - rho(1 - h)) / h for h in (1e-2, 1e-3, 1e-4)]
    right = [(rho(1 + h) - rho(1.0)) / h for h in (1e-2, 1e-3, 1e-4)]
    assert abs(left[2] + 1) < abs(left[0] + 1)
    assert abs(left[2] + 1) < 0.3
    assert right[0] < right[1] < right[2]
    assert right[2] > 100


@pytest.mark.parametrize("t", [1e-6, 1e6, 1e12])
def test_asymptotics(t):
    ratio = rho(t) / rho_asymptotic(t)
    assert 0.9 <= ratio <= 1.1


def test_slow_approach_at_infinity():
    # the pi^2 next to log^2 t decays only logarithmically: at 1e4 the ratio is ~0.896
    t = 1e4
    expected = math.log(t) ** 2 / (math.log(t - 1) ** 2 + math.pi ** 2) * (t * math.log1p(-1 / t)) ** 2
    assert rho(t) / rho_asymptotic(t) == pytest.approx(expected, rel=1e-12)
    assert 0.89 < expected < 0.9


def test_asymptotic_window():
    with pytest.raises(DomainError):
        rho_asymptotic(0.5)
    assert rho_asymptotic(1e-6) == pytest.approx(27.631021115928547)


@pytest.mark.parametrize("t", [0.1, 0.5, T0, 1.0, 1.5, 2.0, 10.0])
def test_boundary_identity(t):
    assert abs(rho(t) - eval_g_boundary(-t).value.imag / math.pi) <= 1e-10


@given(st.floats(1e-8, 1e8).filter(lambda t: abs(t - 1) > 1e-12))
def test_boundary_identity_property(t):
    assert rho(t) == pytest.approx(eval_g_boundary(-t).value.imag / math.pi, rel=1e-10, abs=1e-13)


def test_density_constants():
    c = density_constants()
    assert c.t0 == T0
    assert c.rho_at_one == -1.0
    assert c.A_pos > 0 > c.B_neg
    # mpmath (30 digits): A = 1.43856644880366...
    assert c.A_pos == pytest.approx(1.4385664488036656, abs=1e-11)
    # x (1 - G(x)) -> int rho = 1/2 exactly
    assert c.total == pytest.approx(0.5, abs=1e-11)
    assert c.total > 0.3238


def test_mutated_density_flips_only_left_part():
    t = np.array([0.1, 0.5, 0.7, 2.0])
    np.testing.assert_array_equal(rho_mutated(t), np.array([-1, -1, 1, 1]) * rho(t))
