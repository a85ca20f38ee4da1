"""Random parameter generation for every regime."""
import numpy as np
from ._params import Params, check_params, check_picture, is_case1
from ._domains import tprime_domain


regimes = ("case1_b_gt", "case1_b_lt", "case1_critical",
           "case2_b_gt", "case2_b_lt",
           "case2_t_lt", "case2_t_eq", "case2_t_gt")


def _random_kinetic_power(random_state):
    # away from a = 0 and a = 1
    while True:
        a = random_state.uniform(-1.5, 2.5)
        if abs(a) > 0.2 and abs(a - 1.0) > 0.2:
            return a


def random_params(regime, random_state=np.random.RandomState(0)):
    """Generate random parameters of a given regime.

    Parameters
    ----------
    regime : str
        One of 'case1_b_gt', 'case1_b_lt', 'case1_critical', 'case2_b_gt',
        'case2_b_lt', 'case2_t_lt', 'case2_t_eq', 'case2_t_gt', or
        'special' for the system b = -a with a != 1

    random_state : np.random.RandomState, optional (default: random seed 0)
        Random number generator

    Returns
    -------
    p : Params
        Random parameters inside the regime
    """
    omega = random_state.uniform(0.5, 2.5)
    t_o = random_state.uniform(0.5, 2.0)
    if regime == "case1_b_gt":
        return Params(1.0, random_state.uniform(-0.8, 2.0), omega, t_o)
    if regime == "case1_b_lt":
        return Params(1.0, random_state.uniform(-3.0, -1.2), omega, t_o)
    if regime == "case1_critical":
        return Params(1.0, -1.0, omega, t_o)

    a = _random_kinetic_power(random_state)
    if regime == "case2_b_gt":
        return Params(a, a - 2.0 + random_state.uniform(0.3, 2.5), omega,
                      t_o)
    if regime == "case2_b_lt":
        return Params(a, a - 2.0 - random_state.uniform(0.3, 2.5), omega,
                      t_o)
    if regime == "special":
        return Params(a, -a, omega, t_o)

    t_crit = abs(1.0 - a) / (2.0 * omega)
    if regime == "case2_t_lt":
        t_o = random_state.uniform(0.2, 0.8) * t_crit
    elif regime == "case2_t_eq":
        t_o = t_crit
    elif regime == "case2_t_gt":
        t_o = random_state.uniform(1.5, 4.0) * t_crit
    else:
        raise ValueError("Expected regime in %r, got %r"
                         % (regimes + ("special",), regime))
    return Params(a, a - 2.0, omega, t_o)


def random_time(p, picture, random_state=np.random.RandomState(0),
                span=3.0):
    """Sample a time inside the forward domain of a picture.

    Parameters
    ----------
    p : Params
        Parameters

    picture : str
        'TO', 'TM' or 'TQ'

    random_state : np.random.RandomState, optional (default: random seed 0)
        Random number generator

    span : float, optional (default: 3)
        Maximum distance from the initial time in units of t_o. Bounded TO
        domains are additionally restricted to 80 % of their length.

    Returns
    -------
    time : float
        Offset t' - t_o' for TO, t for TM and TQ
    """
    p = check_params(p)
    picture = check_picture(picture)
    upper = sample_horizon(p, picture, span)
    lower = 0.0 if picture == "TO" else p.t_o
    return random_state.uniform(lower, upper)


def sample_horizon(p, picture, span=3.0):
    """Upper end of the sampling interval used by random_time."""
    picture = check_picture(picture)
    domain = tprime_domain(p)
    length = min(span * p.t_o, 0.8 * domain.length)
    if picture == "TO":
        return length
    if is_case1(p.a):
        return p.t_o * np.exp(length / p.t_o)
    v = 1.0 + (1.0 - p.a) * length / p.t_o
    return p.t_o * v ** (1.0 / (1.0 - p.a))
