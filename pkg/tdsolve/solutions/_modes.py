"""Picture-independent access to the mode functions."""
from ..regimes import check_params, check_picture, classify
from ._to import to_solution_functions
from ._tm import tm_solution_functions
from ._tq import tq_xi, tq_potential


def initial_time(picture, p):
    """Time at which the initial state is prepared.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    Returns
    -------
    time : float
        0 (offset t' - t_o') for TO, t_o for TM and TQ
    """
    if check_picture(picture) == "TO":
        return 0.0
    return check_params(p).t_o


def mode_pair(picture, p, time, key=None):
    """Mode function pair of a picture.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    A : complex
        xi, xi_hat or Xi_P, the coefficient that multiplies P

    B : complex
        xi_dot, xi_hat_dot or Xi_X, the coefficient that multiplies X
    """
    A, B, _, _ = mode_rates(picture, p, time, key)
    return A, B


def mode_rates(picture, p, time, key=None):
    """Mode function pair and its derivatives with respect to picture time.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    time : float
        Offset t' - t_o' for TO, t for TM and TQ

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    A : complex
        Coefficient of P

    B : complex
        Coefficient of X

    A_dot : complex
        dA/dt' for TO, dA/dt otherwise

    B_dot : complex
        dB/dt' for TO, dB/dt otherwise
    """
    picture = check_picture(picture)
    p = check_params(p)
    if key is None:
        key = classify(p, picture)
    if picture == "TO":
        f = to_solution_functions(time, p, key)
        return f.xi, f.xi_dot, f.xi_dot, -2.0 * f.g2 * f.xi
    if picture == "TM":
        f = tm_solution_functions(time, p, key)
        rate = (p.t_o / time) ** p.a
        return (f.xi, f.xi_dot, rate * f.xi_dot,
                -2.0 * f.g2 * f.xi * rate)
    Xi_P, Xi_X = tq_xi(time, p, key)
    drag = 0.5 * p.a / time
    return (Xi_P, Xi_X, Xi_X + drag * Xi_P,
            -tq_potential(time, p) * Xi_P - drag * Xi_X)
