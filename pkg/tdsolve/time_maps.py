"""Maps between the times of the three pictures.

The TQ and TM pictures share the time t and are related by the unitary
dilation exp(i nu D) with nu = (a/2) ln(t/t_o). The TO picture uses the
reparametrized time t' with dt'/dt = (t_o/t)^a.
"""
import math
import warnings
from .regimes import check_params, is_case1, eps, v_min, v_warn


class MappedTime(object):
    """A TM/TQ time together with its TO offset.

    Parameters
    ----------
    t : float
        TM/TQ time

    tprime_offset : float
        TO time offset t' - t_o'
    """
    def __init__(self, t, tprime_offset):
        self.t = t
        self.tprime_offset = tprime_offset

    def __repr__(self):
        return "MappedTime(t=%r, tprime_offset=%r)" % (
            self.t, self.tprime_offset)


def check_time(t):
    """Input validation of a TM/TQ time.

    Parameters
    ----------
    t : float
        Time, must be positive

    Returns
    -------
    t : float
        Validated time

    Raises
    ------
    ValueError
        If input is invalid
    """
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise ValueError("Expected finite time t > 0, got %r" % t)
    return t


def nu(t, p):
    """Exponent of the dilation between TQ and TM pictures.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters

    Returns
    -------
    nu : float
        (a/2) ln(t/t_o)
    """
    t = check_time(t)
    p = check_params(p)
    return 0.5 * p.a * math.log(t / p.t_o)


def dtprime_dt(t, p):
    """Rate dt'/dt = (t_o/t)^a = exp(-2 nu)."""
    t = check_time(t)
    p = check_params(p)
    return (p.t_o / t) ** p.a


def t_prime(t, p, eps=eps):
    """Map a TM/TQ time to the TO time offset.

    Parameters
    ----------
    t : float
        Time, must be positive

    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    mt : MappedTime
        t together with t' - t_o' = t_o ln(t/t_o) for a = 1 and
        (t_o/(1-a)) [(t/t_o)^(1-a) - 1] otherwise
    """
    t = check_time(t)
    p = check_params(p)
    log_ratio = math.log(t / p.t_o)
    if is_case1(p.a, eps):
        return MappedTime(t, p.t_o * log_ratio)
    one_minus_a = 1.0 - p.a
    offset = p.t_o / one_minus_a * math.expm1(one_minus_a * log_ratio)
    return MappedTime(t, offset)


def _offset(tprime_offset):
    if isinstance(tprime_offset, MappedTime):
        return tprime_offset.tprime_offset
    offset = float(tprime_offset)
    if not math.isfinite(offset):
        raise ValueError("Expected finite time offset, got %r" % offset)
    return offset


def scaled_time(tprime_offset, p, strict_check=True):
    """Case-2 scaled time v = 1 + (1-a)(t' - t_o')/t_o.

    Parameters
    ----------
    tprime_offset : float or MappedTime
        TO time offset t' - t_o'

    p : Params
        Parameters with a != 1

    strict_check : bool, optional (default: True)
        Raise a ValueError if v is closer to the singular endpoint than
        v_min. Otherwise we print a warning.

    Returns
    -------
    v : float
        Scaled time

    Raises
    ------
    ValueError
        If v is not positive or below v_min with strict_check
    """
    offset = _offset(tprime_offset)
    v = 1.0 + (1.0 - p.a) * offset / p.t_o
    if v <= 0.0:
        raise ValueError("Expected time offset with v > 0, got offset %r "
                         "(v=%r)" % (offset, v))
    if v < v_min:
        error_msg = ("Time offset %r is at the singular endpoint (v=%r)"
                     % (offset, v))
        if strict_check:
            raise ValueError(error_msg)
        warnings.warn(error_msg)
    return v


def t_from_tprime(mt, p, eps=eps):
    """Map a TO time offset back to TM/TQ time.

    Parameters
    ----------
    mt : MappedTime or float
        TO time offset t' - t_o'

    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    t : float
        Time t with t_prime(t) = mt

    Raises
    ------
    ValueError
        If the offset lies beyond the end of the domain
    """
    offset = _offset(mt)
    p = check_params(p)
    if is_case1(p.a, eps):
        return p.t_o * math.exp(offset / p.t_o)
    v = scaled_time(offset, p)
    return p.t_o * v ** (1.0 / (1.0 - p.a))


def g2_function(p, eps=eps):
    """Coefficient g2(t') as a fast callable of the offset.

    No validation is done inside the returned function, which makes it
    suitable for the inner loop of an integrator.

    Parameters
    ----------
    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    g2 : callable
        Function of the offset t' - t_o'
    """
    p = check_params(p)
    half_omega2 = 0.5 * p.omega ** 2
    if is_case1(p.a, eps):
        rate = (1.0 + p.b) / p.t_o

        def g2(offset):
            return half_omega2 * math.exp(rate * offset)
    else:
        slope = (1.0 - p.a) / p.t_o
        power = (p.a + p.b) / (1.0 - p.a)

        def g2(offset):
            return half_omega2 * (1.0 + slope * offset) ** power
    return g2


def g2(tprime_offset, p, eps=eps, strict_check=True):
    """Potential coefficient of the TO picture.

    Offsets closer than v_warn to the Case-2 singular endpoint produce a
    warning.

    Parameters
    ----------
    tprime_offset : float or MappedTime
        TO time offset t' - t_o'

    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    strict_check : bool, optional (default: True)
        Raise a ValueError at the singular endpoint (v < v_min). Otherwise
        we print a warning.

    Returns
    -------
    g2 : float
        1/2 w^2 exp((1+b)(t'-t_o')/t_o) for a = 1 and
        1/2 w^2 v^((a+b)/(1-a)) otherwise

    Raises
    ------
    ValueError
        At or beyond the singular endpoint v = 0
    """
    offset = _offset(tprime_offset)
    p = check_params(p)
    check_endpoint_distance(offset, p, eps, strict_check)
    return g2_function(p, eps)(offset)


def g2_dot(tprime_offset, p, eps=eps):
    """Derivative of g2 with respect to t'.

    Parameters
    ----------
    tprime_offset : float or MappedTime
        TO time offset t' - t_o'

    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    g2_dot : float
        dg2/dt'
    """
    offset = _offset(tprime_offset)
    p = check_params(p)
    value = g2(offset, p, eps)
    if is_case1(p.a, eps):
        return value * (1.0 + p.b) / p.t_o
    v = scaled_time(offset, p)
    return value * (p.a + p.b) / (p.t_o * v)


def check_endpoint_distance(tprime_offset, p, eps=eps, strict_check=True):
    """Warn when an offset approaches the Case-2 singular endpoint.

    Parameters
    ----------
    tprime_offset : float or MappedTime
        TO time offset t' - t_o'

    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    strict_check : bool, optional (default: True)
        Raise a ValueError at the singular endpoint (v < v_min). Otherwise
        we print a warning.

    Returns
    -------
    v : float or None
        Scaled time, None for a = 1
    """
    p = check_params(p)
    if is_case1(p.a, eps):
        return None
    v = scaled_time(tprime_offset, p, strict_check)
    if v < v_warn:
        warnings.warn("Time offset %r is close to the singular endpoint "
                      "(v=%r < %g)" % (_offset(tprime_offset), v, v_warn))
    return v
