"""Solution functions of the TO picture."""
import math
from ..regimes import check_params, classify, is_case1, delta
from ..time_maps import scaled_time, g2, check_endpoint_distance, _offset
from ._types import AuxVariables, SolutionFunctions
from ._rows import hankel_row, critical_row, harmonic_row


def _to_key(p, key):
    if key is None:
        return classify(p, "TO")
    return key


def to_aux(tprime_offset, p, key=None):
    """Auxiliary variables of the TO picture.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters

    key : SystemKey, optional (default: classify(p, 'TO'))
        Regime of p

    Returns
    -------
    aux : AuxVariables
        sigma for a = 1, b != -1; v, q, Delta and (for b != a - 2) tau
        for a != 1

    Raises
    ------
    ValueError
        If v <= 0
    """
    offset = _offset(tprime_offset)
    p = check_params(p)
    key = _to_key(p, key)
    if is_case1(p.a):
        if key.is_critical:
            return AuxVariables()
        B = p.b + 1.0
        sigma = (2.0 * p.omega * p.t_o / abs(B) *
                 math.exp(0.5 * B * offset / p.t_o))
        return AuxVariables(sigma=sigma)

    v = scaled_time(offset, p)
    B = p.b - p.a + 2.0
    q = B / (1.0 - p.a)
    tau = None
    if not key.is_critical:
        tau = 2.0 * p.omega * p.t_o / abs(B) * v ** (0.5 * q)
    return AuxVariables(v=v, tau=tau, q=q, Delta=delta(p))


def to_solution_functions(tprime_offset, p, key=None):
    """Mode function and bilinears of the TO picture.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters

    key : SystemKey, optional (default: classify(p, 'TO'))
        Regime of p

    Returns
    -------
    functions : SolutionFunctions
        xi, xi_dot and phi functions at the offset
    """
    offset = _offset(tprime_offset)
    p = check_params(p)
    key = _to_key(p, key)
    if key.harmonic:
        xi, xi_dot = harmonic_row(p.omega, p.omega * offset)
    elif is_case1(p.a):
        xi, xi_dot = hankel_row(p, 1.0, 1.0, to_aux(offset, p, key).sigma)
    else:
        v = check_endpoint_distance(offset, p)
        if key.is_critical:
            xi, xi_dot = critical_row(p, key, math.sqrt(v), 0.5 * math.log(v))
        else:
            aux = to_aux(offset, p, key)
            xi, xi_dot = hankel_row(p, p.a, math.sqrt(v), aux.tau)
    return SolutionFunctions(xi, xi_dot, g2(offset, p))


def to_xi(tprime_offset, p, key=None):
    """Complex mode function of the TO picture and its derivative.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters

    key : SystemKey, optional (default: classify(p, 'TO'))
        Regime of p

    Returns
    -------
    xi : complex
        Solution of xi'' + 2 g2 xi = 0 with Wronskian -i

    xi_dot : complex
        Derivative with respect to t'
    """
    functions = to_solution_functions(tprime_offset, p, key)
    return functions.xi, functions.xi_dot


def to_phi(tprime_offset, p, key=None):
    """Bilinears phi1 = xi^2, phi2 = conj(xi)^2, phi3 = 2|xi|^2.

    phi3_dot and phi3_ddot are derivatives with respect to t', obtained
    from 4 Re(conj(xi) xi_dot) and 4 |xi_dot|^2 - 8 g2 |xi|^2.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters

    key : SystemKey, optional (default: classify(p, 'TO'))
        Regime of p

    Returns
    -------
    phi : tuple
        (phi1, phi2, phi3, phi3_dot, phi3_ddot)
    """
    return to_solution_functions(tprime_offset, p, key).phi()


def to_real_pair(tprime_offset, p, key=None):
    """Real solutions with unit Wronskian.

    The pair is gamma1 = sqrt(2) Re(xi), gamma2 = sqrt(2) Im(xi), so that
    gamma1 gamma2_dot - gamma1_dot gamma2 = 1.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters

    key : SystemKey, optional (default: classify(p, 'TO'))
        Regime of p

    Returns
    -------
    pair : tuple
        (gamma1, gamma1_dot, gamma2, gamma2_dot)
    """
    xi, xi_dot = to_xi(tprime_offset, p, key)
    root2 = math.sqrt(2.0)
    return (root2 * xi.real, root2 * xi_dot.real,
            root2 * xi.imag, root2 * xi_dot.imag)


def to_hankel_form(tprime_offset, p):
    """Hankel-form mode function of a non-critical Case-2 system.

    For the system b = -a this differs from the preferred oscillator form
    by a constant factor of unit modulus.

    Parameters
    ----------
    tprime_offset : float
        TO time offset t' - t_o'

    p : Params
        Parameters with a != 1, b != a - 2

    Returns
    -------
    xi : complex
        Mode function

    xi_dot : complex
        Derivative with respect to t'
    """
    p = check_params(p)
    aux = to_aux(tprime_offset, p)
    if aux.tau is None:
        raise ValueError("Expected non-critical Case-2 system, got %r" % p)
    return hankel_row(p, p.a, math.sqrt(aux.v), aux.tau)

