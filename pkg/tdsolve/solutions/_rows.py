"""Closed-form rows shared by the TO and TM pictures.

Each row returns the pair (xi, xi_dot) where xi_dot is the derivative with
respect to t'. The rows are written in terms of

* root_v = sqrt(v) = (t/t_o)^((1-a)/2),
* the Bessel argument (sigma for a = 1, tau otherwise),
* half_log = ln(v) / 2 = chi,

so that the TO picture passes variables of t' and the TM picture passes
variables of t.
"""
import math
import cmath
from ..regimes import T_LT, T_EQ, T_GT, delta
from ..special_functions import hankel1, hankel2


def hankel_order(p, a):
    """Order (1 - a) / (b - a + 2) of the Hankel rows, 0 for a = 1."""
    return (1.0 - a) / (p.b - a + 2.0)


def hankel_row(p, a, root_v, arg):
    """Non-critical rows.

    b - a + 2 > 0 selects H1, b - a + 2 < 0 its conjugate H2.

    Parameters
    ----------
    p : Params
        Parameters

    a : float
        Kinetic power, exactly 1 in Case 1

    root_v : float
        sqrt(v), 1 in Case 1

    arg : float
        Bessel argument

    Returns
    -------
    xi : complex
        Mode function

    xi_dot : complex
        Derivative with respect to t'
    """
    B = p.b - a + 2.0
    mu = hankel_order(p, a)
    hankel = hankel1 if B > 0.0 else hankel2
    prefactor = math.sqrt(math.pi * p.t_o / (2.0 * abs(B)))
    dot_prefactor = math.copysign(
        0.5 * math.sqrt(math.pi * abs(B) / (2.0 * p.t_o)), B)
    xi = prefactor * root_v * hankel(mu, arg)
    xi_dot = dot_prefactor * arg * hankel(mu - 1.0, arg) / root_v
    return xi, xi_dot


def critical_row(p, key, root_v, half_log):
    """Critical Case-2 rows b = a - 2.

    Parameters
    ----------
    p : Params
        Parameters

    key : SystemKey
        Critical regime with subclass and sign tag

    root_v : float
        sqrt(v)

    half_log : float
        ln(v) / 2

    Returns
    -------
    xi : complex
        Mode function

    xi_dot : complex
        Derivative with respect to t'
    """
    s = key.sign_tag
    abs_1ma = abs(1.0 - p.a)
    if key.subclass == T_EQ:
        log_v = 2.0 * half_log
        xi = (math.sqrt(p.t_o / (2.0 * abs_1ma)) * root_v *
              complex(1.0, s * log_v))
        xi_dot = (math.sqrt(abs_1ma / (2.0 * p.t_o)) / root_v *
                  complex(0.5 * s, 1.0 + 0.5 * log_v))
        return xi, xi_dot

    Delta = delta(p)
    if key.subclass == T_LT:
        decay = math.exp(-Delta * half_log)
        growth = math.exp(Delta * half_log)
        xi = (math.sqrt(p.t_o / (2.0 * abs_1ma * Delta)) * root_v *
              complex(decay, s * growth))
        xi_dot = (0.5 * math.sqrt(abs_1ma / (2.0 * p.t_o * Delta)) /
                  root_v * complex(s * (1.0 - Delta) * decay,
                                   (1.0 + Delta) * growth))
        return xi, xi_dot
    if key.subclass == T_GT:
        phase = cmath.exp(1j * s * Delta * half_log)
        xi = math.sqrt(p.t_o / (abs_1ma * Delta)) * root_v * phase
        xi_dot = (0.5 * math.sqrt(abs_1ma / (p.t_o * Delta)) / root_v *
                  complex(s, Delta) * phase)
        return xi, xi_dot
    raise ValueError("Expected critical subclass in %r, got %r"
                     % ((T_LT, T_EQ, T_GT), key.subclass))


def harmonic_row(omega, phase):
    """Constant-frequency row xi = sqrt(1/(2w)) exp(i phase).

    Parameters
    ----------
    omega : float
        Frequency

    phase : float
        w (t' - t_o')

    Returns
    -------
    xi : complex
        Mode function

    xi_dot : complex
        Derivative i w xi with respect to t'
    """
    xi = math.sqrt(0.5 / omega) * cmath.exp(1j * phase)
    return xi, 1j * omega * xi
