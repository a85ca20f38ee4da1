"""Expectation values and uncertainties of squeezed states.

All observables are built from the mode pair (A, B) of a picture, i.e.
(xi, xi_dot) for TO, (xi_hat, xi_hat_dot) for TM and (Xi_P, Xi_X) for TQ.
The classical trajectory through (x_o, p_o) at the initial time is

    <x> = x_o (-2 Im(conj(B_o) A)) + p_o (2 Im(conj(A_o) A)),
    <p> = x_o (-2 Im(conj(B_o) B)) + p_o (2 Im(conj(A_o) B)),

divided by the Wronskian 2 Im(conj(A_o) B_o) = 1.
"""
import math
import numpy as np
from .regimes import (check_params, check_picture, classify, is_case1,
                      time_domain, tprime_domain, check_time_grid)
from .special_functions import bessel_j, bessel_y
from .time_maps import check_endpoint_distance
from .solutions import initial_time, mode_pair


class SqueezeState(object):
    """Initial squeezed state.

    Parameters
    ----------
    x_o : float
        Initial position expectation

    p_o : float
        Initial momentum expectation

    r : float, optional (default: 0)
        Squeeze magnitude, r = 0 is a coherent state

    theta : float, optional (default: 0)
        Squeeze phase in radians
    """
    def __init__(self, x_o, p_o, r=0.0, theta=0.0):
        self.x_o = float(x_o)
        self.p_o = float(p_o)
        self.r = float(r)
        self.theta = float(theta)

    @property
    def reduced_theta(self):
        """Squeeze phase reduced to [0, 2 pi)."""
        return self.theta % (2.0 * math.pi)

    def __repr__(self):
        return "SqueezeState(x_o=%r, p_o=%r, r=%r, theta=%r)" % (
            self.x_o, self.p_o, self.r, self.theta)


def check_squeeze_state(state):
    """Input validation of a squeezed state.

    Parameters
    ----------
    state : SqueezeState or tuple
        State or tuple (x_o, p_o[, r[, theta]])

    Returns
    -------
    state : SqueezeState
        Validated state

    Raises
    ------
    ValueError
        If the tuple has fewer than 2 or more than 4 entries, a field is
        not finite or r < 0
    """
    if not isinstance(state, SqueezeState):
        if not 2 <= len(state) <= 4:
            raise ValueError("Expected squeeze state tuple "
                             "(x_o, p_o[, r[, theta]]), got %r" % (state,))
        state = SqueezeState(*state)
    values = (state.x_o, state.p_o, state.r, state.theta)
    if not np.all(np.isfinite(values)):
        raise ValueError("Expected finite squeeze state, got %r" % (state,))
    if state.r < 0.0:
        raise ValueError("Expected r >= 0, got %r" % state.r)
    return state


class PhasePoint(object):
    """Point of a phase-space trace.

    Parameters
    ----------
    x : float
        Position expectation

    p : float
        Momentum expectation

    t : float
        Time (offset t' - t_o' in the TO picture)

    dx : float, optional
        Position uncertainty

    dp : float, optional
        Momentum uncertainty

    product : float, optional
        Product of the variances (dx dp)^2
    """
    def __init__(self, x, p, t, dx=None, dp=None, product=None):
        self.x = x
        self.p = p
        self.t = t
        self.dx = dx
        self.dp = dp
        self.product = product

    def as_tuple(self):
        return self.t, self.x, self.p, self.dx, self.dp, self.product

    def __repr__(self):
        return "PhasePoint(x=%r, p=%r, t=%r, dx=%r, dp=%r, product=%r)" % (
            self.x, self.p, self.t, self.dx, self.dp, self.product)


def _im_conj_product(a, b):
    """Im(conj(a) b)."""
    return a.real * b.imag - a.imag * b.real


def _initial_pair(picture, p, key):
    return mode_pair(picture, p, initial_time(picture, p), key)


def _trajectory_weights(initial, value):
    A_o, B_o = initial
    w = 2.0 * _im_conj_product(A_o, B_o)
    return (-2.0 * _im_conj_product(B_o, value) / w,
            2.0 * _im_conj_product(A_o, value) / w)


def _prepare(picture, p, state, key):
    picture = check_picture(picture)
    p = check_params(p)
    state = check_squeeze_state(state)
    if key is None:
        key = classify(p, picture)
    return picture, p, state, key


def expval_x(picture, p, state, time, key=None):
    """Position expectation value.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    state : SqueezeState
        Initial state

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    x : float
        <x>, equal to x_o f_x + p_o f_p
    """
    picture, p, state, key = _prepare(picture, p, state, key)
    A, _ = mode_pair(picture, p, time, key)
    f_x, f_p = _trajectory_weights(_initial_pair(picture, p, key), A)
    return state.x_o * f_x + state.p_o * f_p


def expval_p(picture, p, state, time, key=None):
    """Momentum expectation value.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    state : SqueezeState
        Initial state

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    p : float
        <p>, equal to x_o g_x + p_o g_p
    """
    picture, p, state, key = _prepare(picture, p, state, key)
    _, B = mode_pair(picture, p, time, key)
    g_x, g_p = _trajectory_weights(_initial_pair(picture, p, key), B)
    return state.x_o * g_x + state.p_o * g_p


def _variance(value, state):
    return (abs(value) ** 2 * math.cosh(2.0 * state.r) +
            (value * value * np.exp(-1j * state.theta)).real *
            math.sinh(2.0 * state.r))


def uncertainties(picture, p, state, time, key=None):
    """Position and momentum variances of a squeezed state.

    (dx)^2 = |A|^2 cosh 2r + Re(A^2 exp(-i theta)) sinh 2r and the same
    with B for (dp)^2.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    state : SqueezeState
        Initial state

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    dx2 : float
        Position variance

    dp2 : float
        Momentum variance

    product : float
        dx2 dp2, at least 1/4
    """
    picture, p, state, key = _prepare(picture, p, state, key)
    A, B = mode_pair(picture, p, time, key)
    dx2 = _variance(A, state)
    dp2 = _variance(B, state)
    return dx2, dp2, dx2 * dp2


def hankel_form_uncertainties(p, state, t):
    """Bessel-product forms of the TM uncertainties for a = 1, b != -1.

    These are

    * (dx)^2 = (pi t_o / 4|b+1|) {[(J0^2 - Y0^2) cos - J0 Y0 sin] sinh 2r
      + [J0^2 + Y0^2] cosh 2r},
    * (dp)^2 = (pi |b+1| / 8 t_o) sigma {[(J-1^2 - Y-1^2) cos
      - J-1 Y-1 sin] sinh 2r + [J-1^2 + Y-1^2] cosh 2r},
    * product = 1/4 {1 + (pi^2 sigma^2 / 4) {[J-1 J0 + Y-1 Y0] cosh 2r
      + [(J0 J-1 - Y0 Y-1) cos + (J0 Y-1 + Y0 J-1) sin] sinh 2r}^2}.

    The product agrees with uncertainties() for b > -1. The variances
    differ from it by a factor 2, the sign of the sin(theta) term and a
    power of sigma.

    Parameters
    ----------
    p : Params
        Parameters with a = 1 and b != -1

    state : SqueezeState
        Initial state

    t : float
        Time

    Returns
    -------
    dx2 : float
        Position variance in Bessel-product form

    dp2 : float
        Momentum variance in Bessel-product form

    product : float
        Uncertainty product in Bessel-product form
    """
    p = check_params(p)
    state = check_squeeze_state(state)
    key = classify(p, "TM")
    if not is_case1(p.a) or key.is_critical:
        raise ValueError("Expected TM system with a = 1 and b != -1, got %r"
                         % (p,))
    B = p.b + 1.0
    sigma = 2.0 * p.omega * p.t_o / abs(B) * (t / p.t_o) ** (0.5 * B)
    J0, Y0 = bessel_j(0.0, sigma), bessel_y(0.0, sigma)
    J1, Y1 = bessel_j(-1.0, sigma), bessel_y(-1.0, sigma)
    c, s = math.cos(state.theta), math.sin(state.theta)
    ch, sh = math.cosh(2.0 * state.r), math.sinh(2.0 * state.r)

    dx2 = math.pi * p.t_o / (4.0 * abs(B)) * (
        ((J0 ** 2 - Y0 ** 2) * c - J0 * Y0 * s) * sh +
        (J0 ** 2 + Y0 ** 2) * ch)
    dp2 = math.pi * abs(B) / (8.0 * p.t_o) * sigma * (
        ((J1 ** 2 - Y1 ** 2) * c - J1 * Y1 * s) * sh +
        (J1 ** 2 + Y1 ** 2) * ch)
    cross = ((J1 * J0 + Y1 * Y0) * ch +
             ((J0 * J1 - Y0 * Y1) * c + (J0 * Y1 + Y0 * J1) * s) * sh)
    product = 0.25 * (1.0 + 0.25 * math.pi ** 2 * sigma ** 2 * cross ** 2)
    return dx2, dp2, product


def _check_trace_grid(picture, p, time_grid):
    if picture == "TO":
        time_grid = check_time_grid(time_grid, tprime_domain(p))
        check_endpoint_distance(time_grid[-1], p)
        return time_grid
    return check_time_grid(time_grid, time_domain(p, picture))


def trace(picture, p, state, time_grid, key=None):
    """Expectation values and uncertainties along a time grid.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    state : SqueezeState
        Initial state

    time_grid : array-like, shape (n_steps,)
        Monotone grid inside the forward domain of the picture

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    points : list of PhasePoint
        <x>, <p>, dx, dp and (dx dp)^2 at each grid time
    """
    picture, p, state, key = _prepare(picture, p, state, key)
    time_grid = _check_trace_grid(picture, p, time_grid)
    points = []
    for time in time_grid:
        time = float(time)
        dx2, dp2, product = uncertainties(picture, p, state, time, key)
        points.append(PhasePoint(
            expval_x(picture, p, state, time, key),
            expval_p(picture, p, state, time, key), time,
            math.sqrt(dx2), math.sqrt(dp2), product))
    return points


def trace_to_array(points):
    """Convert a trace to an array.

    Parameters
    ----------
    points : list of PhasePoint
        Trace

    Returns
    -------
    array : array, shape (n_steps, 6)
        Columns t, <x>, <p>, dx, dp, product; missing uncertainties are NaN
    """
    rows = [[np.nan if value is None else value
             for value in point.as_tuple()] for point in points]
    return np.array(rows, dtype=np.float64).reshape(-1, 6)


def zero_crossings(values):
    """Indices i at which values[i] and values[i + 1] have opposite signs.

    Parameters
    ----------
    values : array-like, shape (n_steps,)
        Samples

    Returns
    -------
    indices : array, shape (n_crossings,)
        Index before each sign change, exact zeros count as positive
    """
    negative = np.asarray(values, dtype=np.float64) < 0.0
    return np.nonzero(negative[1:] != negative[:-1])[0]


def lobe_maxima(values, complete_only=True):
    """Maximum of |values| between consecutive zero crossings.

    Parameters
    ----------
    values : array-like, shape (n_steps,)
        Samples

    complete_only : bool, optional (default: True)
        Drop the lobes that touch the ends of the samples

    Returns
    -------
    maxima : array, shape (n_lobes,)
        Maximum absolute value per lobe
    """
    values = np.asarray(values, dtype=np.float64)
    bounds = np.concatenate(([0], zero_crossings(values) + 1,
                             [len(values)]))
    magnitude = np.abs(values)
    maxima = np.array([np.max(magnitude[start:end])
                       for start, end in zip(bounds[:-1], bounds[1:])])
    if complete_only:
        maxima = maxima[1:-1]
    return maxima
