"""Bessel and Hankel functions of real order and positive real argument.

The kernel is :mod:`scipy.special`. An independent ascending power series
(:func:`bessel_j_series`, :func:`bessel_y_series`) is provided as a
reference for moderate arguments.
"""
import math
import warnings
import numpy as np
from scipy import special
from .regimes import max_order


KINDS = ("J", "Y", "H1", "H2")
IDENTITY_TOLERANCE = 1e-8


def identity_precision(mu, z):
    """Relative precision of the Wronskian and cross-product identities.

    For negative non-integer orders J_mu and Y_mu both grow like
    Y_|mu|(z) towards the origin and the identities cancel terms of size
    (pi/2) (1 + |mu|) Y_|mu|(z)^2 relative to their value 2 / (pi z).
    Other orders keep full double precision.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    Returns
    -------
    precision : float
        Estimated relative error, inf if Y_|mu|(z) overflows
    """
    machine_eps = np.finfo(np.float64).eps
    if mu >= 0.0 or abs(mu - round(mu)) < 1e-6:
        return machine_eps
    y = abs(float(special.yv(-mu, z)))
    if not math.isfinite(y):
        return np.inf
    return machine_eps * max(1.0, 0.5 * np.pi * (1.0 - mu) * y * y)


def check_argument(mu, z):
    """Input validation of Bessel order and argument.

    Orders beyond max_order and arguments at which the Bessel identities
    lose more precision than IDENTITY_TOLERANCE (negative non-integer
    orders close to the origin, see :func:`identity_precision`) produce a
    warning.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Argument, must be positive

    Returns
    -------
    mu : float
        Validated order

    z : float
        Validated argument

    Raises
    ------
    ValueError
        If input is invalid
    """
    mu = float(mu)
    z = float(z)
    if not math.isfinite(mu):
        raise ValueError("Expected finite Bessel order, got %r" % mu)
    if not math.isfinite(z) or z <= 0.0:
        raise ValueError("Expected finite argument z > 0, got %r" % z)
    if abs(mu) > max_order:
        warnings.warn("Bessel order %g exceeds the tested range |mu| <= %g"
                      % (mu, max_order))
    precision = identity_precision(mu, z)
    if precision > IDENTITY_TOLERANCE:
        warnings.warn("Bessel identities at order %g and z=%g hold only to "
                      "a relative precision of about %.1e (cancellation "
                      "for negative non-integer orders)"
                      % (mu, z, precision))
    return mu, z


def bessel_j(mu, z):
    """Bessel function of the first kind J_mu(z).

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    Returns
    -------
    j : float
        J_mu(z)

    Raises
    ------
    ValueError
        If z <= 0 or an input is not finite
    """
    mu, z = check_argument(mu, z)
    return float(special.jv(mu, z))


def bessel_y(mu, z):
    """Bessel function of the second kind Y_mu(z).

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    Returns
    -------
    y : float
        Y_mu(z)

    Raises
    ------
    ValueError
        If z <= 0, an input is not finite, or Y_mu(z) overflows because of
        the singularity at the origin
    """
    mu, z = check_argument(mu, z)
    y = float(special.yv(mu, z))
    if not math.isfinite(y):
        raise ValueError("Y_%g diverges at z=%r (singularity at the origin)"
                         % (mu, z))
    return y


def hankel1(mu, z):
    """Hankel function of the first kind H1_mu(z) = J_mu(z) + i Y_mu(z).

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    Returns
    -------
    h : complex
        H1_mu(z)

    Raises
    ------
    ValueError
        If z <= 0, an input is not finite, or the value overflows
    """
    mu, z = check_argument(mu, z)
    h = complex(special.hankel1(mu, z))
    if not (math.isfinite(h.real) and math.isfinite(h.imag)):
        raise ValueError("H1_%g diverges at z=%r (singularity at the origin)"
                         % (mu, z))
    return h


def hankel2(mu, z):
    """Hankel function of the second kind, the conjugate of H1_mu(z).

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    Returns
    -------
    h : complex
        H2_mu(z)
    """
    return hankel1(mu, z).conjugate()


def bessel_function(mu, z, kind):
    """Evaluate a cylinder function of the given kind.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    kind : str
        One of 'J', 'Y', 'H1', 'H2'

    Returns
    -------
    f : float or complex
        F_mu(z)
    """
    if kind == "J":
        return bessel_j(mu, z)
    if kind == "Y":
        return bessel_y(mu, z)
    if kind == "H1":
        return hankel1(mu, z)
    if kind == "H2":
        return hankel2(mu, z)
    raise ValueError("Expected kind in %r, got %r" % (KINDS, kind))


def bessel_derivative(mu, z, kind):
    """Derivative with respect to z by recursion.

    Uses F'_mu(z) = F_{mu-1}(z) - (mu / z) F_mu(z), which holds for all
    cylinder functions.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    kind : str
        One of 'J', 'Y', 'H1', 'H2'

    Returns
    -------
    df : float or complex
        dF_mu(z) / dz
    """
    return (bessel_function(mu - 1.0, z, kind) -
            mu / z * bessel_function(mu, z, kind))


def _j_series(mu, z, max_terms):
    half_z = 0.5 * z
    term = half_z ** mu * special.rgamma(mu + 1.0)
    total = term
    k = 0
    while k < max_terms:
        k += 1
        term *= -half_z * half_z / (k * (k + mu))
        total += term
        if abs(term) <= 1e-17 * abs(total):
            break
    return total


def bessel_j_series(mu, z, max_terms=500):
    """Ascending power series of J_mu(z).

    J_mu(z) = sum_k (-1)^k (z/2)^(2k+mu) / (k! Gamma(k+mu+1)). Accurate
    for moderate arguments (z up to about 20); cancellation grows with z.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    max_terms : int, optional (default: 500)
        Maximum number of series terms

    Returns
    -------
    j : float
        J_mu(z)
    """
    mu, z = check_argument(mu, z)
    n = round(mu)
    if mu < 0.0 and n == mu:
        # J_{-n} = (-1)^n J_n
        return (-1.0) ** n * _j_series(-mu, z, max_terms)
    return _j_series(mu, z, max_terms)


def _y_series_integer(n, z, max_terms):
    half_z = 0.5 * z
    finite_part = 0.0
    for k in range(n):
        finite_part += (math.factorial(n - k - 1) / math.factorial(k) *
                        half_z ** (2 * k - n))
    log_part = 2.0 * math.log(half_z) * _j_series(float(n), z, max_terms)
    total = 0.0
    term = half_z ** n / math.factorial(n)
    for k in range(max_terms):
        contribution = (special.digamma(k + 1.0) +
                        special.digamma(n + k + 1.0)) * term
        total += contribution
        term *= -half_z * half_z / ((k + 1.0) * (n + k + 1.0))
        if k > 2 and abs(contribution) <= 1e-17 * abs(total):
            break
    return (log_part - finite_part - total) / np.pi


def bessel_y_series(mu, z, max_terms=500):
    """Power-series evaluation of Y_mu(z).

    Non-integer orders use Y_mu = (J_mu cos(mu pi) - J_{-mu}) / sin(mu pi).
    Orders within 1e-6 of an integer n use the logarithmic series of Y_n.

    Parameters
    ----------
    mu : float
        Real order

    z : float
        Positive argument

    max_terms : int, optional (default: 500)
        Maximum number of series terms

    Returns
    -------
    y : float
        Y_mu(z)
    """
    mu, z = check_argument(mu, z)
    n = int(round(mu))
    if abs(mu - n) < 1e-6:
        y = _y_series_integer(abs(n), z, max_terms)
        return (-1.0) ** abs(n) * y if n < 0 else y
    return ((bessel_j_series(mu, z, max_terms) * math.cos(mu * np.pi) -
             bessel_j_series(-mu, z, max_terms)) / math.sin(mu * np.pi))


def wronskian_jy(mu, z):
    """Wronskian J_mu Y'_mu - J'_mu Y_mu, equal to 2 / (pi z)."""
    return (bessel_j(mu, z) * bessel_derivative(mu, z, "Y") -
            bessel_derivative(mu, z, "J") * bessel_y(mu, z))


def wronskian_hankel(mu, z):
    """Wronskian H1_mu H2'_mu - H1'_mu H2_mu, equal to -4i / (pi z)."""
    return (hankel1(mu, z) * bessel_derivative(mu, z, "H2") -
            bessel_derivative(mu, z, "H1") * hankel2(mu, z))
