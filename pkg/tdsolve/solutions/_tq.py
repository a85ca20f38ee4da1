"""Solution functions and symmetry coefficients of the TQ picture."""
import math
from ..regimes import check_params, classify
from ..time_maps import check_time
from ._tm import tm_solution_functions


def _tq_key(p, key):
    if key is None:
        return classify(p, "TQ")
    return key


def tq_xi(t, p, key=None):
    """Mode functions of the TQ picture.

    The TQ functions follow from the TM functions by the dilation
    nu = (a/2) ln(t/t_o): Xi_P = xi_hat exp(nu) and
    Xi_X = xi_hat_dot exp(-nu).

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TQ'))
        Regime of p

    Returns
    -------
    Xi_P : complex
        Coefficient of P in the lowering operator

    Xi_X : complex
        Coefficient of X in the lowering operator (up to sign), satisfying
        dXi_P/dt = Xi_X + (a/2t) Xi_P
    """
    t = check_time(t)
    p = check_params(p)
    key = _tq_key(p, key)
    functions = tm_solution_functions(t, p, key)
    scale = (t / p.t_o) ** (0.5 * p.a)
    return functions.xi * scale, functions.xi_dot / scale


def tq_coeffs(t, p, key=None):
    """Coefficients of the quadratic symmetry operator of the TQ picture.

    The operator is C3T T - C3D D + C3X2 X^2 with

    * C3T = 2 |Xi_P|^2 = phi3_hat exp(2 nu),
    * C3D = (a/t) |Xi_P|^2 + 2 Re(conj(Xi_P) Xi_X) = dC3T/dt / 2,
    * C3X2 = |Xi_X|^2 - w^2 (t/t_o)^(b-a) |Xi_P|^2
      = phi3_hat_ddot exp(-2 nu) / 4.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters with a != 0

    key : SystemKey, optional (default: classify(p, 'TQ'))
        Regime of p

    Returns
    -------
    C3T : float
        Coefficient of T

    C3D : float
        Coefficient of -D

    C3X2 : float
        Coefficient of X^2
    """
    t = check_time(t)
    p = check_params(p)
    Xi_P, Xi_X = tq_xi(t, p, key)
    norm_P = abs(Xi_P) ** 2
    C3T = 2.0 * norm_P
    C3D = p.a / t * norm_P + 2.0 * (Xi_P.conjugate() * Xi_X).real
    C3X2 = abs(Xi_X) ** 2 - tq_potential(t, p) * norm_P
    return C3T, C3D, C3X2


def tq_potential(t, p):
    """Coefficient w^2 (t/t_o)^(b-a) of X^2 in the TQ equations of motion."""
    return p.omega ** 2 * math.pow(t / p.t_o, p.b - p.a)
