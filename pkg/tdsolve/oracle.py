"""Numerical reference solutions by fixed-step Runge-Kutta integration.

The oracle integrates the mode equation xi'' + 2 g2(t') xi = 0 of the TO
picture and the classical equations of motion of all three pictures
without using any of the closed forms.
"""
import math
import numpy as np
from .regimes import (check_params, check_picture, check_time_grid,
                      time_domain, tprime_domain, is_case1, default_step,
                      v_warn)
from .time_maps import g2_function, g2
from .solutions import initial_time, tq_potential
from .observables import PhasePoint


class IntegratorConfig(object):
    """Configuration of the fixed-step integrator.

    Parameters
    ----------
    step : float, optional (default: 1e-4)
        Maximum step size in units of the picture's time

    max_steps : int, optional (default: 10000000)
        Maximum number of steps over the whole grid

    tolerance_report : float, optional (default: 1e-9)
        Maximum relative change of the final state when the step is halved,
        used by the step-halving check
    """
    def __init__(self, step=default_step, max_steps=10 ** 7,
                 tolerance_report=1e-9):
        if not step > 0.0:
            raise ValueError("Expected step > 0, got %r" % step)
        if max_steps < 1:
            raise ValueError("Expected max_steps >= 1, got %r" % max_steps)
        self.step = float(step)
        self.max_steps = int(max_steps)
        self.tolerance_report = float(tolerance_report)

    def halved(self):
        """Configuration with half the step size."""
        return IntegratorConfig(0.5 * self.step, 2 * self.max_steps,
                                self.tolerance_report)

    def __repr__(self):
        return ("IntegratorConfig(step=%r, max_steps=%r, tolerance_report=%r)"
                % (self.step, self.max_steps, self.tolerance_report))


def rk4(fun, grid, y0, config=None):
    """Fixed-step fourth-order Runge-Kutta integration.

    Each grid interval is divided into the smallest number of equal steps
    that do not exceed config.step.

    Parameters
    ----------
    fun : callable
        Right-hand side f(time, y) returning an array like y

    grid : array-like, shape (n_steps,)
        Non-decreasing output times, the first one is the initial time

    y0 : array-like, shape (n_dims,)
        Initial state, may be complex

    config : IntegratorConfig, optional (default: IntegratorConfig())
        Step configuration

    Returns
    -------
    Y : array, shape (n_steps, n_dims)
        State at each grid time

    Raises
    ------
    RuntimeError
        If the grid needs more than config.max_steps steps
    """
    if config is None:
        config = IntegratorConfig()
    grid = np.asarray(grid, dtype=np.float64)
    y = np.asarray(y0)
    dtype = np.complex128 if np.iscomplexobj(y) else np.float64
    y = y.astype(dtype)
    Y = np.empty((len(grid), len(y)), dtype=dtype)
    Y[0] = y

    n_substeps = [max(1, int(math.ceil((grid[i + 1] - grid[i]) /
                                       config.step - 1e-9)))
                  for i in range(len(grid) - 1)]
    if sum(n_substeps) > config.max_steps:
        raise RuntimeError("Grid requires %d steps, more than max_steps=%d"
                           % (sum(n_substeps), config.max_steps))

    for i in range(len(grid) - 1):
        n = n_substeps[i]
        h = (grid[i + 1] - grid[i]) / n
        t = grid[i]
        for j in range(n):
            k1 = fun(t, y)
            k2 = fun(t + 0.5 * h, y + 0.5 * h * k1)
            k3 = fun(t + 0.5 * h, y + 0.5 * h * k2)
            k4 = fun(t + h, y + h * k3)
            y = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            t = grid[i] + (j + 1) * h
        Y[i + 1] = y
    return Y


def _check_tprime_grid(p, grid):
    grid = check_time_grid(grid, tprime_domain(p))
    if not is_case1(p.a):
        v_end = 1.0 + (1.0 - p.a) * grid[-1] / p.t_o
        if v_end < v_warn:
            raise ValueError("Expected grid to stop at v >= %g, got v=%r"
                             % (v_warn, v_end))
    return grid


def integrate_gamma(p, init, grid, config=None, check_convergence=False):
    """Integrate the mode equation gamma'' + 2 g2(t') gamma = 0.

    Parameters
    ----------
    p : Params
        Parameters

    init : tuple
        Initial values (gamma, gamma_dot) at grid[0], real or complex

    grid : array-like, shape (n_steps,)
        Offsets t' - t_o' inside the TO domain, stopping at v >= 1e-3

    config : IntegratorConfig, optional (default: IntegratorConfig())
        Step configuration

    check_convergence : bool, optional (default: False)
        Repeat the integration with half the step and raise a RuntimeError
        if the final state changes by more than config.tolerance_report
        (relative)

    Returns
    -------
    Y : array, shape (n_steps, 2)
        gamma and gamma_dot at each grid offset
    """
    p = check_params(p)
    grid = _check_tprime_grid(p, grid)
    if config is None:
        config = IntegratorConfig()
    g2_of = g2_function(p)

    def fun(offset, y):
        return np.array([y[1], -2.0 * g2_of(offset) * y[0]])

    y0 = np.array(init)
    Y = rk4(fun, grid, y0, config)
    if check_convergence:
        Y_half = rk4(fun, grid, y0, config.halved())
        change = (np.linalg.norm(Y_half[-1] - Y[-1]) /
                  max(np.linalg.norm(Y_half[-1]), 1e-300))
        if change > config.tolerance_report:
            raise RuntimeError("Step halving changed the final state by %g "
                               "(relative), more than %g"
                               % (change, config.tolerance_report))
    return Y


def classical_rhs(picture, p):
    """Hamilton equations of the classical system of a picture.

    * TO: x' = p, p' = -2 g2(t') x
    * TM: x' = (t_o/t)^a p, p' = -w^2 (t/t_o)^b x
    * TQ: x' = p + (a/2t) x, p' = -w^2 (t/t_o)^(b-a) x - (a/2t) p

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    Returns
    -------
    fun : callable
        Right-hand side f(time, (x, p)) returning an array
    """
    picture = check_picture(picture)
    p = check_params(p)
    if picture == "TO":
        g2_of = g2_function(p)

        def fun(offset, y):
            return np.array([y[1], -2.0 * g2_of(offset) * y[0]])
    elif picture == "TM":
        def fun(t, y):
            return np.array([(p.t_o / t) ** p.a * y[1],
                             -p.omega ** 2 * (t / p.t_o) ** p.b * y[0]])
    else:
        def fun(t, y):
            drag = 0.5 * p.a / t
            return np.array([y[1] + drag * y[0],
                             -tq_potential(t, p) * y[0] - drag * y[1]])
    return fun


def classical_hamiltonian(picture, p, x, momentum, time):
    """Classical Hamiltonian of a picture.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    x : float
        Position

    momentum : float
        Momentum

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    Returns
    -------
    H : float
        1/2 p^2 + g2 x^2 (TO), 1/2 (t_o/t)^a p^2 + 1/2 w^2 (t/t_o)^b x^2
        (TM) or 1/2 p^2 + (a/2t) x p + 1/2 w^2 (t/t_o)^(b-a) x^2 (TQ)
    """
    picture = check_picture(picture)
    p = check_params(p)
    if picture == "TO":
        return 0.5 * momentum ** 2 + g2(time, p) * x ** 2
    if picture == "TM":
        return (0.5 * (p.t_o / time) ** p.a * momentum ** 2 +
                0.5 * p.omega ** 2 * (time / p.t_o) ** p.b * x ** 2)
    return (0.5 * momentum ** 2 + 0.5 * p.a / time * x * momentum +
            0.5 * tq_potential(time, p) * x ** 2)


def integrate_classical(picture, p, init, grid, config=None):
    """Integrate the classical equations of motion of a picture.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    init : tuple
        Initial position and momentum (x_o, p_o) at the initial time

    grid : array-like, shape (n_steps,)
        Output times inside the picture's forward domain. Integration starts
        at the initial time (0 for TO, t_o otherwise).

    config : IntegratorConfig, optional (default: IntegratorConfig())
        Step configuration

    Returns
    -------
    trajectory : list of PhasePoint
        Position and momentum at each grid time
    """
    picture = check_picture(picture)
    p = check_params(p)
    if picture == "TO":
        grid = _check_tprime_grid(p, grid)
    else:
        grid = check_time_grid(grid, time_domain(p, picture))
    start = initial_time(picture, p)
    full_grid = np.concatenate(([start], grid))
    Y = rk4(classical_rhs(picture, p), full_grid,
            np.asarray(init, dtype=np.float64), config)
    return [PhasePoint(x, momentum, t)
            for (x, momentum), t in zip(Y[1:], grid)]


def convergence_order(p, init, t_end, step=0.05):
    """Observed order of the integrator from step halving.

    Parameters
    ----------
    p : Params
        Parameters

    init : tuple
        Initial values (gamma, gamma_dot) at offset 0

    t_end : float
        Final offset

    step : float, optional (default: 0.05)
        Coarsest step h; the integration is repeated with h/2 and h/4

    Returns
    -------
    order : float
        log2(|y_h - y_h/2| / |y_h/2 - y_h/4|), close to 4 for smooth
        coefficients
    """
    grid = [0.0, t_end]
    ends = [integrate_gamma(p, init, grid, IntegratorConfig(step / 2 ** k))[-1]
            for k in range(3)]
    coarse = np.linalg.norm(ends[0] - ends[1])
    fine = np.linalg.norm(ends[1] - ends[2])
    return math.log(coarse / fine, 2.0)


def wronskian_drift(p, grid, config=None):
    """Drift of the Wronskian of two integrated real solutions.

    The solutions start from (1, 0) and (0, 1), so that W = 1 initially.

    Parameters
    ----------
    p : Params
        Parameters

    grid : array-like, shape (n_steps,)
        Offsets t' - t_o' starting at 0

    config : IntegratorConfig, optional (default: IntegratorConfig())
        Step configuration

    Returns
    -------
    drift : float
        max |W - 1| divided by the length of the grid
    """
    grid = np.asarray(grid, dtype=np.float64)
    Y1 = integrate_gamma(p, (1.0, 0.0), grid, config)
    Y2 = integrate_gamma(p, (0.0, 1.0), grid, config)
    W = Y1[:, 0] * Y2[:, 1] - Y1[:, 1] * Y2[:, 0]
    length = max(grid[-1] - grid[0], 1e-300)
    return np.max(np.abs(W - 1.0)) / length
