import math
import numpy as np
import pytest
from tdsolve.regimes import (Params, regimes, random_params, random_time,
                             classify)
from tdsolve.special_functions import hankel1
from tdsolve.time_maps import nu
from tdsolve.solutions import (tq_xi, tq_coeffs, tq_potential, tm_xi,
                               assert_complex_almost_equal, assert_wronskian)
from tdsolve.lie_algebra import build_generators, T, D, X2, P2
from numpy.testing import assert_almost_equal, assert_array_almost_equal


def test_tq_xi_harmonic_initial_time():
    omega = 1.3
    Xi_P, Xi_X = tq_xi(0.5, Params(1.0, -1.0, omega, 0.5))
    assert_complex_almost_equal(Xi_P, math.sqrt(0.5 / omega))
    assert_complex_almost_equal(Xi_X, 1j * omega * math.sqrt(0.5 / omega))


def test_tq_xi_case2_hankel_row():
    Xi_P, _ = tq_xi(2.0, Params(2.0, 1.0, 1.0, 1.0))
    expected = (math.sqrt(math.pi / 2.0) * 2.0 ** 0.5 *
                hankel1(-1.0, 2.0 * math.sqrt(2.0)))
    assert_complex_almost_equal(Xi_P, expected)


def test_tq_is_dilated_tm():
    random_state = np.random.RandomState(0)
    for regime in regimes:
        p = random_params(regime, random_state)
        for _ in range(10):
            t = random_time(p, "TQ", random_state)
            xi_hat, xi_hat_dot = tm_xi(t, p)
            Xi_P, Xi_X = tq_xi(t, p)
            dilation = math.exp(nu(t, p))
            assert_complex_almost_equal(Xi_P, xi_hat * dilation, decimal=10)
            assert_complex_almost_equal(Xi_X, xi_hat_dot / dilation,
                                        decimal=10)


def test_tq_equation_of_motion():
    random_state = np.random.RandomState(1)
    h = 1e-6
    for regime in regimes:
        p = random_params(regime, random_state)
        key = classify(p, "TQ")
        for _ in range(3):
            t = random_time(p, "TQ", random_state)
            Xi_P, Xi_X = tq_xi(t, p, key)
            dXi_P = (tq_xi(t + h, p, key)[0] -
                     tq_xi(t - h, p, key)[0]) / (2.0 * h)
            expected = Xi_X + 0.5 * p.a / t * Xi_P
            assert abs(dXi_P - expected) <= 1e-6 * max(1.0, abs(expected))


def test_tq_coeffs_special_system():
    random_state = np.random.RandomState(2)
    for _ in range(5):
        p = random_params("special", random_state)
        t = random_time(p, "TQ", random_state)
        ratio = t / p.t_o
        C3T, C3D, C3X2 = tq_coeffs(t, p)
        assert_almost_equal(C3T, ratio ** p.a / p.omega)
        assert_almost_equal(
            C3D, p.a / (2.0 * p.omega * p.t_o) * ratio ** (p.a - 1.0))
        assert_almost_equal(C3X2, 0.0)


def test_tq_coeffs_harmonic():
    omega, t_o = 1.5, 2.0
    p = Params(1.0, -1.0, omega, t_o)
    assert_array_almost_equal(
        tq_coeffs(t_o, p), [1.0 / omega, 1.0 / (2.0 * omega * t_o), 0.0])
    for t in (3.0, 7.0):
        assert_almost_equal(tq_coeffs(t, p)[2], 0.0)


def test_tq_coeffs_derivative():
    random_state = np.random.RandomState(3)
    h = 1e-6
    for regime in regimes:
        p = random_params(regime, random_state)
        t = random_time(p, "TQ", random_state)
        _, C3D, _ = tq_coeffs(t, p)
        fd = (tq_coeffs(t + h, p)[0] - tq_coeffs(t - h, p)[0]) / (2.0 * h)
        assert abs(C3D - 0.5 * fd) <= 1e-6 * max(1.0, abs(C3D))


def test_tq_potential():
    assert_almost_equal(tq_potential(2.0, Params(1.0, 2.0, 3.0, 1.0)), 18.0)


def test_tq_coeffs_are_on_shell_generator():
    random_state = np.random.RandomState(4)
    for regime in regimes + ("special",):
        p = random_params(regime, random_state)
        M, _, _ = build_generators("TQ", p)
        for _ in range(3):
            t = random_time(p, "TQ", random_state)
            C3T, C3D, C3X2 = tq_coeffs(t, p)
            coefficients = M.coefficients(t).real
            scale = max(1.0, abs(C3T))
            assert_almost_equal(coefficients[T] / scale, C3T / scale)
            assert_almost_equal(coefficients[D] / scale, -C3D / scale)
            assert_almost_equal(coefficients[X2] / scale, C3X2 / scale)
            assert_almost_equal(coefficients[P2] / scale, 0.0)


def test_tq_position_coefficient_is_dilated_derivative():
    for p in (Params(1.0, -1.0, 2.0, 1.0), Params(0.5, 0.5, 1.0, 1.0),
              Params(0.5, -1.5, 1.0, 0.25)):
        t = 2.0
        Xi_P, Xi_X = tq_xi(t, p)
        xi_hat, xi_hat_dot = tm_xi(t, p)
        dilation = math.exp(nu(t, p))
        assert_wronskian(Xi_P, Xi_X)
        assert_complex_almost_equal(Xi_X, xi_hat_dot / dilation)
        with pytest.raises(AssertionError):
            assert_wronskian(Xi_P, xi_hat / dilation)
