import math
import numpy as np
import pytest
from tdsolve.regimes import Params
from tdsolve.solutions import to_xi
from tdsolve.observables import SqueezeState, expval_x, expval_p
from tdsolve.oracle import (
    IntegratorConfig, rk4, integrate_gamma, classical_rhs,
    classical_hamiltonian, integrate_classical, convergence_order,
    wronskian_drift)
from numpy.testing import assert_almost_equal, assert_array_almost_equal


def test_integrator_config():
    config = IntegratorConfig(1e-3, 100)
    halved = config.halved()
    assert halved.step == 5e-4
    assert halved.max_steps == 200
    assert "step=0.001" in repr(config)
    with pytest.raises(ValueError, match="Expected step > 0"):
        IntegratorConfig(0.0)
    with pytest.raises(ValueError, match="Expected max_steps >= 1"):
        IntegratorConfig(1e-3, 0)


def test_rk4_exponential():
    grid = np.linspace(0.0, 1.0, 5)
    Y = rk4(lambda t, y: -y, grid, [1.0], IntegratorConfig(1e-3))
    assert_array_almost_equal(Y[:, 0], np.exp(-grid), decimal=12)


def test_rk4_complex_state():
    grid = [0.0, 1.0]
    Y = rk4(lambda t, y: 1j * y, grid, [1.0 + 0.0j], IntegratorConfig(1e-3))
    assert Y.dtype == np.complex128
    assert_almost_equal(Y[-1, 0].real, math.cos(1.0), decimal=12)
    assert_almost_equal(Y[-1, 0].imag, math.sin(1.0), decimal=12)


def test_rk4_max_steps():
    with pytest.raises(RuntimeError, match="more than max_steps"):
        rk4(lambda t, y: -y, [0.0, 1.0], [1.0], IntegratorConfig(1e-3, 10))


def test_rk4_repeated_grid_point():
    Y = rk4(lambda t, y: -y, [0.0, 0.0, 0.5], [1.0], IntegratorConfig(1e-3))
    assert Y[1, 0] == 1.0
    assert_almost_equal(Y[2, 0], math.exp(-0.5), decimal=12)


def test_integrate_gamma_harmonic():
    omega = 1.0
    p = Params(1.0, -1.0, omega, 1.0)
    grid = np.linspace(0.0, 2.0 * math.pi / omega, 9)
    Y = integrate_gamma(p, (1.0, 0.0), grid)
    assert_array_almost_equal(Y[:, 0], np.cos(omega * grid), decimal=8)
    assert_array_almost_equal(Y[:, 1], -omega * np.sin(omega * grid),
                              decimal=8)


def test_integrate_gamma_matches_closed_form():
    p = Params(1.0, 1.0, 2.0, 1.0)
    grid = np.linspace(0.0, 3.0, 7)
    closed = np.array([to_xi(offset, p) for offset in grid])
    Y = integrate_gamma(p, closed[0], grid, IntegratorConfig(2e-4))
    scale = np.max(np.abs(closed[:, 0]))
    assert np.max(np.abs(Y[:, 0] - closed[:, 0])) < 1e-7 * scale


def test_integrate_gamma_critical_t_gt():
    p = Params(0.5, -1.5, 2.0, 1.0)
    grid = np.linspace(0.0, 2.0, 5)
    closed = np.array([to_xi(offset, p) for offset in grid])
    Y = integrate_gamma(p, closed[0], grid, IntegratorConfig(1e-3))
    assert_array_almost_equal(Y[:, 0], closed[:, 0], decimal=7)
    assert_array_almost_equal(Y[:, 1], closed[:, 1], decimal=7)


def test_integrate_gamma_step_halving():
    p = Params(1.0, -1.0, 1.0, 1.0)
    integrate_gamma(p, (1.0, 0.0), [0.0, 1.0], IntegratorConfig(1e-3),
                    check_convergence=True)
    with pytest.raises(RuntimeError, match="Step halving changed"):
        integrate_gamma(p, (1.0, 0.0), [0.0, 10.0],
                        IntegratorConfig(0.5, tolerance_report=1e-12),
                        check_convergence=True)


def test_integrate_gamma_near_endpoint():
    p = Params(3.0, 0.0, 1.0, 1.0)
    with pytest.raises(ValueError, match="Expected grid to stop at v >="):
        integrate_gamma(p, (1.0, 0.0), [0.0, 0.49999])
    with pytest.raises(ValueError, match="Expected time grid inside"):
        integrate_gamma(p, (1.0, 0.0), [0.0, 0.6])


def test_wronskian_drift():
    drift = wronskian_drift(Params(1.0, -1.0, 1.0, 1.0),
                            np.linspace(0.0, 2.0 * math.pi, 5),
                            IntegratorConfig(1e-3))
    assert drift < 1e-9


def test_convergence_order():
    order = convergence_order(Params(1.0, -1.0, 1.0, 1.0), (1.0, 0.0), 3.0)
    assert 3.7 <= order <= 4.3


def test_classical_rhs_and_hamiltonian():
    p = Params(2.0, 1.0, 3.0, 1.0)
    assert_array_almost_equal(classical_rhs("TM", p)(2.0, [1.0, 2.0]),
                              [0.5, -18.0])
    assert_array_almost_equal(classical_rhs("TQ", p)(2.0, [1.0, 2.0]),
                              [2.5, -4.5 - 1.0])
    assert_almost_equal(classical_hamiltonian("TM", p, 1.0, 2.0, 2.0),
                        0.5 * 0.25 * 4.0 + 0.5 * 9.0 * 2.0)
    assert_almost_equal(classical_hamiltonian("TQ", p, 1.0, 2.0, 2.0),
                        2.0 + 1.0 + 0.5 * 4.5)
    harmonic = Params(1.0, -1.0, 2.0, 1.0)
    assert_almost_equal(classical_hamiltonian("TO", harmonic, 1.0, 2.0, 0.3),
                        2.0 + 2.0)


def test_integrate_classical_initial_point():
    p = Params(2.0, 1.0, 1.0, 1.5)
    for picture, start in (("TO", 0.0), ("TM", 1.5), ("TQ", 1.5)):
        points = integrate_classical(picture, p, (0.3, -0.2), [start])
        assert len(points) == 1
        assert points[0].t == start
        assert_almost_equal(points[0].x, 0.3)
        assert_almost_equal(points[0].p, -0.2)


def test_integrate_classical_tm_matches_closed_form():
    p = Params(2.0, 1.0, 1.0, 1.0)
    state = SqueezeState(1.0, 1.0)
    points = integrate_classical("TM", p, (1.0, 1.0), [1.25, 1.5])
    for point in points:
        assert abs(point.x - expval_x("TM", p, state, point.t)) < 1e-7
        assert abs(point.p - expval_p("TM", p, state, point.t)) < 1e-7


def test_integrate_classical_tq_critical():
    p = Params(0.5, -1.5, 2.0, 1.0)
    state = SqueezeState(0.4, -0.7)
    grid = np.linspace(1.0, 10.0, 4)
    points = integrate_classical("TQ", p, (0.4, -0.7), grid,
                                 IntegratorConfig(1e-3))
    for point in points:
        assert abs(point.x - expval_x("TQ", p, state, point.t)) < 1e-7
        assert abs(point.p - expval_p("TQ", p, state, point.t)) < 1e-7
