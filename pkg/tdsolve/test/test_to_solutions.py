import math
import cmath
import numpy as np
import pytest
from tdsolve.regimes import (Params, regimes, random_params, random_time,
                             classify, delta, T_LT, T_EQ, T_GT)
from tdsolve.special_functions import hankel1
from tdsolve.solutions import (
    SolutionFunctions, to_aux, to_solution_functions, to_xi, to_phi,
    to_real_pair, to_hankel_form, assert_wronskian,
    assert_complex_almost_equal, assert_solution_functions_consistent)
from numpy.testing import assert_almost_equal, assert_array_almost_equal


def test_to_aux_case1():
    aux = to_aux(0.0, Params(1.0, 1.0, 2.0, 1.0))
    assert_almost_equal(aux.sigma, 2.0)
    assert aux.v is None
    aux = to_aux(0.3, Params(1.0, -1.0, 2.0, 1.0))
    assert aux.sigma is None


def test_to_aux_case2():
    p = Params(2.0, 1.5, 1.5, 1.0)
    aux = to_aux(0.0, p)
    assert aux.v == 1.0
    assert_almost_equal(aux.tau, 2.0 * 1.5 / 1.5)
    aux = to_aux(2.0, Params(0.5, 0.5, 1.0, 1.0))
    assert_almost_equal(aux.v, 2.0)
    assert_almost_equal(aux.q, 4.0)
    assert_almost_equal(aux.tau, 4.0)
    assert "tau=" in repr(aux)
    with pytest.raises(ValueError, match="Expected time offset with v > 0"):
        to_aux(0.6, Params(3.0, 0.0, 1.0, 1.0))


def test_to_xi_harmonic():
    omega = 1.5
    p = Params(1.0, -1.0, omega, 2.0)
    xi, xi_dot = to_xi(math.pi / (2.0 * omega), p)
    assert_complex_almost_equal(xi, 1j * math.sqrt(0.5 / omega))
    assert_complex_almost_equal(xi_dot, 1j * omega * xi)


def test_to_xi_case1_hankel():
    p = Params(1.0, 1.0, 2.0, 1.0)
    offset = 0.3
    sigma = 2.0 * math.exp(offset)
    xi, _ = to_xi(offset, p)
    assert_complex_almost_equal(
        xi, math.sqrt(math.pi / 4.0) * hankel1(0.0, sigma))


def test_to_xi_case1_below_critical_uses_h2():
    p = Params(1.0, -2.0, 2.0, 1.0)
    offset = 0.3
    sigma = 4.0 * math.exp(-0.5 * offset)
    xi, _ = to_xi(offset, p)
    assert_complex_almost_equal(
        xi, math.sqrt(math.pi / 2.0) * hankel1(0.0, sigma).conjugate())


def test_to_xi_critical_t_gt():
    p = Params(0.5, -1.5, 2.0, 1.0)
    key = classify(p)
    assert key.sign_tag == 1
    Delta = delta(p)
    assert_almost_equal(Delta, math.sqrt(63.0))
    v = 1.5
    xi, _ = to_xi(1.0, p)
    expected = (math.sqrt(1.0 / (0.5 * Delta)) * math.sqrt(v) *
                cmath.exp(0.5j * Delta * math.log(v)))
    assert_complex_almost_equal(xi, expected)


def test_to_phi_harmonic():
    omega = 2.5
    p = Params(1.0, -1.0, omega, 1.0)
    for offset in (0.0, 0.7, 3.0):
        phi1, phi2, phi3, phi3_dot, phi3_ddot = to_phi(offset, p)
        assert_almost_equal(phi3, 1.0 / omega)
        assert_almost_equal(phi3_dot, 0.0)
        assert_almost_equal(phi3_ddot, 0.0)
        assert_complex_almost_equal(phi2, np.conj(phi1))


def test_to_phi_critical_t_gt():
    p = Params(0.5, -1.5, 2.0, 1.0)
    Delta = delta(p)
    for offset in (0.0, 1.0, 4.0):
        v = 1.0 + 0.5 * offset
        _, _, phi3, _, phi3_ddot = to_phi(offset, p)
        assert_almost_equal(phi3, 2.0 / (0.5 * Delta) * v)
        assert_almost_equal(phi3_ddot, 0.0)


def test_phi3_derivatives_finite_differences():
    random_state = np.random.RandomState(0)
    h = 1e-6
    for regime in regimes:
        p = random_params(regime, random_state)
        key = classify(p)
        for _ in range(5):
            offset = random_time(p, "TO", random_state) + 2.0 * h
            _, _, _, phi3_dot, phi3_ddot = to_phi(offset, p, key)
            upper = to_phi(offset + h, p, key)
            lower = to_phi(offset - h, p, key)
            fd_dot = (upper[2] - lower[2]) / (2.0 * h)
            fd_ddot = (upper[3] - lower[3]) / (2.0 * h)
            assert abs(phi3_dot - fd_dot) <= 1e-6 * max(1.0, abs(phi3_dot))
            assert abs(phi3_ddot - fd_ddot) <= 1e-6 * max(1.0,
                                                          abs(phi3_ddot))


def test_wronskian_all_regimes():
    random_state = np.random.RandomState(1)
    for regime in regimes + ("special",):
        p = random_params(regime, random_state)
        key = classify(p)
        for _ in range(20):
            offset = random_time(p, "TO", random_state)
            functions = to_solution_functions(offset, p, key)
            assert_solution_functions_consistent(functions, decimal=7)


def test_real_pair_wronskian():
    random_state = np.random.RandomState(2)
    for regime in regimes:
        p = random_params(regime, random_state)
        offset = random_time(p, "TO", random_state)
        gamma1, gamma1_dot, gamma2, gamma2_dot = to_real_pair(offset, p)
        assert_almost_equal(gamma1 * gamma2_dot - gamma1_dot * gamma2, 1.0,
                            decimal=7)


def test_hankel_form_of_special_system():
    for a in (0.5, 1.5, -1.0):
        p = Params(a, -a, 1.3, 0.8)
        ratios = []
        for offset in (0.0, 0.1, 0.2):
            xi, xi_dot = to_hankel_form(offset, p)
            assert_wronskian(xi, xi_dot)
            ratios.append(xi / to_xi(offset, p)[0])
        assert_array_almost_equal(np.abs(ratios), np.ones(3))
        assert_complex_almost_equal(ratios[1], ratios[0])
        assert_complex_almost_equal(ratios[2], ratios[0])


def test_hankel_form_requires_noncritical_case2():
    with pytest.raises(ValueError, match="Expected non-critical Case-2"):
        to_hankel_form(0.1, Params(0.5, -1.5, 2.0, 1.0))


def test_solution_functions_value_type():
    functions = SolutionFunctions(1.0 + 1.0j, 0.5j, 0.25)
    assert_almost_equal(functions.phi3, 4.0)
    assert_complex_almost_equal(functions.phi1, 2.0j)
    assert "xi=" in repr(functions)


def test_to_xi_near_endpoint_warns():
    p = Params(3.0, 1.0, 2.0, 1.0)
    with pytest.warns(UserWarning, match="close to the singular endpoint"):
        to_xi(0.5 * (1.0 - 1e-5), p)


@pytest.mark.parametrize("p, offset", [
    (Params(1.0, 1.0, 2.0, 1.0), 0.4),
    (Params(1.0, -2.0, 2.0, 1.0), 0.4),
    (Params(0.5, 0.5, 1.0, 1.0), 1.3),
    (Params(0.5, -2.5, 1.5, 1.0), 0.8),
    (Params(2.0, 1.5, 1.5, 1.0), 0.5),
])
def test_to_phi3_hankel_products(p, offset):
    B = p.b - p.a + 2.0
    mu = (1.0 - p.a) / B
    if p.a == 1.0:
        v = 1.0
        arg = 2.0 * p.omega * p.t_o / abs(B) * math.exp(
            0.5 * B * offset / p.t_o)
    else:
        v = 1.0 + (1.0 - p.a) * offset / p.t_o
        arg = 2.0 * p.omega * p.t_o / abs(B) * v ** (0.5 * B / (1.0 - p.a))
    h = hankel1(mu, arg)
    h_lower = hankel1(mu - 1.0, arg)
    _, _, phi3, phi3_dot, phi3_ddot = to_phi(offset, p)
    assert_almost_equal(phi3, math.pi * p.t_o / abs(B) * v * abs(h) ** 2)
    assert_almost_equal(
        phi3_dot,
        math.copysign(math.pi, B) * arg * (h_lower * h.conjugate()).real)
    assert_almost_equal(
        phi3_ddot, math.pi * abs(B) / (2.0 * p.t_o) / v * arg ** 2 *
        (abs(h_lower) ** 2 - abs(h) ** 2))


@pytest.mark.parametrize("p, offset, subclass", [
    (Params(0.5, -1.5, 1.0, 0.1), 0.3, T_LT),
    (Params(2.0, 0.0, 1.0, 0.1), 0.05, T_LT),
    (Params(0.5, -1.5, 1.0, 0.25), 0.6, T_EQ),
    (Params(2.0, 0.0, 1.0, 0.5), 0.2, T_EQ),
    (Params(0.5, -1.5, 2.0, 1.0), 1.0, T_GT),
])
def test_to_phi3_critical_closed_forms(p, offset, subclass):
    assert classify(p).subclass == subclass
    k = 1.0 - p.a
    s = math.copysign(1.0, k)
    v = 1.0 + k * offset / p.t_o
    log_v = math.log(v)
    if subclass == T_EQ:
        expected = (p.t_o / abs(k) * v * (1.0 + log_v ** 2),
                    s * (1.0 + log_v) ** 2,
                    2.0 * abs(k) / p.t_o * (1.0 + log_v) / v)
    elif subclass == T_LT:
        Delta = delta(p)
        decay = v ** -Delta
        growth = v ** Delta
        expected = (p.t_o / (abs(k) * Delta) * v * (decay + growth),
                    s / Delta * ((1.0 - Delta) * decay +
                                 (1.0 + Delta) * growth),
                    abs(k) / p.t_o / v * (-(1.0 - Delta) * decay +
                                          (1.0 + Delta) * growth))
    else:
        Delta = delta(p)
        expected = (2.0 * p.t_o / (abs(k) * Delta) * v, 2.0 * s / Delta,
                    0.0)
    assert_array_almost_equal(to_phi(offset, p)[2:], expected)
