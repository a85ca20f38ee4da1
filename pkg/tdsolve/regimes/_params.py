"""Physical parameters of an oscillator instance."""
import math
from ._constants import pictures, eps


class Params(object):
    """Parameters of H = 1/2 (t_o/t)^a P^2 + 1/2 w^2 (t/t_o)^b X^2.

    Parameters
    ----------
    a : float
        Kinetic power

    b : float
        Potential power

    omega : float
        Frequency, must be positive

    t_o : float
        Reference time at which the initial state is prepared, must be
        positive
    """
    def __init__(self, a, b, omega, t_o):
        self.a = float(a)
        self.b = float(b)
        self.omega = float(omega)
        self.t_o = float(t_o)

    def as_tuple(self):
        """Parameters as tuple (a, b, omega, t_o)."""
        return self.a, self.b, self.omega, self.t_o

    def __eq__(self, other):
        return (isinstance(other, Params) and
                self.as_tuple() == other.as_tuple())

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return "Params(a=%r, b=%r, omega=%r, t_o=%r)" % self.as_tuple()


def check_params(p):
    """Input validation of oscillator parameters.

    Parameters
    ----------
    p : Params or tuple
        Parameters (a, b, omega, t_o)

    Returns
    -------
    p : Params
        Validated parameters

    Raises
    ------
    ValueError
        If input is invalid
    """
    if not isinstance(p, Params):
        try:
            p = Params(*p)
        except TypeError:
            raise ValueError("Expected Params or tuple (a, b, omega, t_o), "
                             "got %r" % (p,))
    for name in ("a", "b", "omega", "t_o"):
        value = getattr(p, name)
        if not math.isfinite(value):
            raise ValueError("Expected finite %s, got %r" % (name, value))
    if p.t_o <= 0.0:
        raise ValueError("Expected t_o > 0, got %r" % p.t_o)
    if p.omega <= 0.0:
        raise ValueError("Expected omega > 0, got %r" % p.omega)
    return p


def check_picture(picture):
    """Input validation of a picture name.

    Parameters
    ----------
    picture : str
        One of 'TO', 'TM', 'TQ' (case-insensitive)

    Returns
    -------
    picture : str
        Upper-case picture name

    Raises
    ------
    ValueError
        If input is invalid
    """
    name = str(picture).upper()
    if name not in pictures:
        raise ValueError("Expected picture in %r, got %r"
                         % (pictures, picture))
    return name


def is_close(x, y, eps=eps):
    """Relative comparison used for all regime boundaries.

    Parameters
    ----------
    x : float
        First value

    y : float
        Second value

    eps : float, optional (default: 1e-12)
        Relative tolerance, scaled by max(1, |x|, |y|)

    Returns
    -------
    close : bool
        Values are considered equal
    """
    return abs(x - y) <= eps * max(1.0, abs(x), abs(y))


def is_case1(a, eps=eps):
    """Whether the kinetic power selects the logarithmic time map (a = 1)."""
    return is_close(a, 1.0, eps)


def critical_time(p):
    """Reference time |1 - a| / (2 w) that splits the critical class.

    Parameters
    ----------
    p : Params
        Parameters

    Returns
    -------
    t_crit : float
        Threshold for t_o
    """
    return abs(1.0 - p.a) / (2.0 * p.omega)


def delta(p):
    """Auxiliary exponent Delta = sqrt(|1 - 4 w^2 t_o^2 / (1 - a)^2|).

    Parameters
    ----------
    p : Params
        Parameters with a != 1

    Returns
    -------
    delta : float
        Non-negative auxiliary exponent
    """
    ratio = 2.0 * p.omega * p.t_o / (1.0 - p.a)
    return math.sqrt(abs(1.0 - ratio * ratio))
