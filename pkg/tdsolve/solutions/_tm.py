"""Solution functions of the TM picture.

The TM functions are the TO functions composed with t'(t), evaluated
directly in terms of t/t_o. Derivatives are taken with respect to t', so
that d/dt = (t_o/t)^a d/dt'.
"""
import math
from ..regimes import check_params, classify, is_case1, delta
from ..time_maps import check_time
from ._types import AuxVariables, SolutionFunctions
from ._rows import hankel_row, critical_row, harmonic_row


def _tm_key(p, key):
    if key is None:
        return classify(p, "TM")
    return key


def tm_aux(t, p, key=None):
    """Auxiliary variables of the TM picture.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TM'))
        Regime of p

    Returns
    -------
    aux : AuxVariables
        tau = (2 w t_o / |b-a+2|) (t/t_o)^((b-a+2)/2) (also reported as
        sigma for a = 1), v = (t/t_o)^(1-a), chi = (1-a) ln(t/t_o) / 2,
        q and Delta for a != 1
    """
    t = check_time(t)
    p = check_params(p)
    key = _tm_key(p, key)
    ratio = t / p.t_o
    a = 1.0 if is_case1(p.a) else p.a
    B = p.b - a + 2.0
    tau = None
    if not key.is_critical:
        tau = 2.0 * p.omega * p.t_o / abs(B) * ratio ** (0.5 * B)
    chi = 0.5 * (1.0 - a) * math.log(ratio)
    if a == 1.0:
        return AuxVariables(sigma=tau, v=1.0, tau=tau, chi=chi)
    return AuxVariables(v=ratio ** (1.0 - a), tau=tau, q=B / (1.0 - a),
                        Delta=delta(p), chi=chi)


def tm_solution_functions(t, p, key=None):
    """Mode function and bilinears of the TM picture.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TM'))
        Regime of p

    Returns
    -------
    functions : SolutionFunctions
        xi_hat, xi_hat_dot and the phi functions at t
    """
    t = check_time(t)
    p = check_params(p)
    key = _tm_key(p, key)
    ratio = t / p.t_o
    log_ratio = math.log(ratio)
    case1 = is_case1(p.a)
    if key.harmonic:
        if case1:
            phase = p.omega * p.t_o * log_ratio
        else:
            phase = (p.omega * p.t_o / (1.0 - p.a) *
                     math.expm1((1.0 - p.a) * log_ratio))
        xi, xi_dot = harmonic_row(p.omega, phase)
    elif case1:
        xi, xi_dot = hankel_row(p, 1.0, 1.0, tm_aux(t, p, key).tau)
    else:
        root_v = ratio ** (0.5 * (1.0 - p.a))
        if key.is_critical:
            chi = 0.5 * (1.0 - p.a) * log_ratio
            xi, xi_dot = critical_row(p, key, root_v, chi)
        else:
            xi, xi_dot = hankel_row(p, p.a, root_v, tm_aux(t, p, key).tau)
    a = 1.0 if case1 else p.a
    g2 = 0.5 * p.omega ** 2 * ratio ** (a + p.b)
    return SolutionFunctions(xi, xi_dot, g2)


def tm_xi(t, p, key=None):
    """Complex mode function of the TM picture.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TM'))
        Regime of p

    Returns
    -------
    xi_hat : complex
        xi(t'(t))

    xi_hat_dot : complex
        xi_dot(t'(t)), the derivative with respect to t'
    """
    functions = tm_solution_functions(t, p, key)
    return functions.xi, functions.xi_dot


def tm_phi(t, p, key=None):
    """phi3 = 2|xi_hat|^2 and its derivatives with respect to t'.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TM'))
        Regime of p

    Returns
    -------
    phi3 : float
        2 |xi_hat|^2

    phi3_dot : float
        dphi3/dt' at t'(t), dphi3/dt = (t_o/t)^a phi3_dot

    phi3_ddot : float
        d^2phi3/dt'^2 at t'(t)
    """
    functions = tm_solution_functions(t, p, key)
    return functions.phi3, functions.phi3_dot, functions.phi3_ddot
