import math
import warnings
import numpy as np
import pytest
from tdsolve.regimes import Params, regimes, random_params, random_time
from tdsolve.time_maps import (
    MappedTime, check_time, nu, dtprime_dt, t_prime, scaled_time,
    t_from_tprime, g2_function, g2, g2_dot, check_endpoint_distance)
from numpy.testing import assert_almost_equal


def test_check_time():
    assert check_time(2) == 2.0
    with pytest.raises(ValueError, match="Expected finite time t > 0"):
        check_time(0.0)
    with pytest.raises(ValueError, match="Expected finite time t > 0"):
        check_time(np.inf)


def test_nu():
    assert nu(1.5, Params(2.0, 0.0, 1.0, 1.5)) == 0.0
    assert_almost_equal(nu(math.e, Params(2.0, 0.0, 1.0, 1.0)), 1.0)
    assert_almost_equal(nu(4.0, Params(1.0, 0.0, 1.0, 1.0)),
                        0.5 * math.log(4.0))


def test_dtprime_dt():
    p = Params(2.0, 0.0, 1.0, 1.0)
    assert_almost_equal(dtprime_dt(2.0, p), 0.25)
    assert_almost_equal(dtprime_dt(2.0, p), math.exp(-2.0 * nu(2.0, p)))


def test_t_prime():
    mt = t_prime(1.0, Params(1.0, 0.0, 1.0, 1.0))
    assert mt.t == 1.0
    assert mt.tprime_offset == 0.0

    offset = t_prime(1e4, Params(3.0, 0.0, 1.0, 1.0)).tprime_offset
    assert offset < 0.5
    assert_almost_equal(offset, 0.5, decimal=7)

    assert_almost_equal(
        t_prime(4.0, Params(0.5, 0.0, 1.0, 1.0)).tprime_offset, 2.0)


def test_t_from_tprime():
    p = Params(1.0, 0.0, 1.0, 2.0)
    assert t_from_tprime(0.0, p) == 2.0
    assert_almost_equal(t_from_tprime(2.0 * math.log(3.0), p), 6.0)
    assert_almost_equal(t_from_tprime(2.0, Params(0.5, 0.0, 1.0, 1.0)), 4.0)
    assert_almost_equal(
        t_from_tprime(MappedTime(4.0, 2.0), Params(0.5, 0.0, 1.0, 1.0)), 4.0)
    with pytest.raises(ValueError, match="Expected time offset with v > 0"):
        t_from_tprime(0.6, Params(3.0, 0.0, 1.0, 1.0))


def test_t_prime_round_trip():
    random_state = np.random.RandomState(0)
    for regime in regimes:
        p = random_params(regime, random_state)
        for _ in range(10):
            t = random_time(p, "TM", random_state)
            assert_almost_equal(t_from_tprime(t_prime(t, p), p) / t, 1.0,
                                decimal=12)


def test_scaled_time_endpoint():
    p = Params(3.0, 0.0, 1.0, 1.0)
    assert_almost_equal(scaled_time(0.25, p), 0.5)
    offset = 0.5 * (1.0 - 1e-13)
    with pytest.raises(ValueError, match="singular endpoint"):
        scaled_time(offset, p)
    with pytest.warns(UserWarning, match="singular endpoint"):
        scaled_time(offset, p, strict_check=False)
    with pytest.raises(ValueError, match="Expected time offset with v > 0"):
        scaled_time(0.5, p)


def test_check_endpoint_distance():
    assert check_endpoint_distance(1.0, Params(1.0, 0.0, 1.0, 1.0)) is None
    p = Params(3.0, 0.0, 1.0, 1.0)
    assert_almost_equal(check_endpoint_distance(0.25, p), 0.5)
    with pytest.warns(UserWarning, match="close to the singular endpoint"):
        check_endpoint_distance(0.5 * (1.0 - 1e-4), p)


def test_g2_at_initial_time():
    random_state = np.random.RandomState(0)
    for regime in regimes:
        p = random_params(regime, random_state)
        assert_almost_equal(g2(0.0, p), 0.5 * p.omega ** 2)


def test_g2_harmonic():
    p = Params(1.0, -1.0, 1.5, 2.0)
    for offset in (0.0, 1.0, 10.0):
        assert_almost_equal(g2(offset, p), 0.5 * 1.5 ** 2)


def test_g2_value():
    assert_almost_equal(g2(2.0, Params(0.5, 0.5, 1.0, 1.0)), 2.0)
    with pytest.raises(ValueError, match="Expected time offset with v > 0"):
        g2(0.6, Params(3.0, 0.0, 1.0, 1.0))


def test_g2_chain_rule():
    random_state = np.random.RandomState(1)
    for regime in regimes:
        p = random_params(regime, random_state)
        for _ in range(10):
            t = random_time(p, "TM", random_state)
            a = 1.0 if regime.startswith("case1") else p.a
            expected = 0.5 * p.omega ** 2 * (t / p.t_o) ** (a + p.b)
            assert_almost_equal(g2(t_prime(t, p), p) / expected, 1.0,
                                decimal=10)


def test_g2_function_matches_g2():
    p = Params(2.0, 1.0, 1.5, 1.0)
    fun = g2_function(p)
    for offset in (0.0, 0.2, 0.7):
        assert fun(offset) == g2(offset, p)


def test_g2_dot_finite_differences():
    random_state = np.random.RandomState(2)
    h = 1e-6
    for regime in regimes:
        p = random_params(regime, random_state)
        for _ in range(5):
            offset = random_time(p, "TO", random_state) + 2.0 * h
            fd = (g2(offset + h, p) - g2(offset - h, p)) / (2.0 * h)
            derivative = g2_dot(offset, p)
            assert abs(derivative - fd) <= 1e-6 * max(1.0, abs(derivative))


def test_g2_near_endpoint_warns():
    p = Params(3.0, 1.0, 2.0, 1.0)
    with pytest.warns(UserWarning, match="close to the singular endpoint"):
        g2(0.5 * (1.0 - 1e-5), p)
    offset = 0.5 * (1.0 - 1e-13)
    with pytest.raises(ValueError, match="singular endpoint"):
        g2(offset, p)
    with pytest.warns(UserWarning, match="at the singular endpoint"):
        g2(offset, p, strict_check=False)


def test_g2_inside_domain_is_silent():
    p = Params(3.0, 1.0, 2.0, 1.0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert_almost_equal(g2(0.25, p), 2.0 * 0.5 ** (4.0 / -2.0))
