"""Time domains of the three pictures."""
import numpy as np
from ._constants import eps, inf
from ._params import check_params, check_picture, is_case1


class TimeDomain(object):
    """Interval [lower, upper) or [lower, upper] of admissible times.

    Parameters
    ----------
    lower : float
        Lower bound, included

    upper : float
        Upper bound, may be infinite

    open_upper : bool, optional (default: True)
        The upper bound is excluded
    """
    def __init__(self, lower, upper, open_upper=True):
        if not lower < upper:
            raise ValueError("Expected lower < upper, got [%g, %g]"
                             % (lower, upper))
        self.lower = float(lower)
        self.upper = float(upper)
        self.open_upper = open_upper

    @property
    def length(self):
        return self.upper - self.lower

    def contains(self, time):
        """Whether a time lies inside the domain."""
        if time < self.lower:
            return False
        if self.open_upper:
            return time < self.upper
        return time <= self.upper

    def __eq__(self, other):
        return (isinstance(other, TimeDomain) and
                (self.lower, self.upper, self.open_upper) ==
                (other.lower, other.upper, other.open_upper))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "TimeDomain([%r, %r%s)" % (
            self.lower, self.upper, ")" if self.open_upper else "]")


def tprime_domain(p, eps=eps):
    """Domain of the TO time offset t' - t_o'.

    Parameters
    ----------
    p : Params
        Parameters

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    domain : TimeDomain
        [0, inf) for a <= 1 and [0, t_o / (a - 1)) for a > 1
    """
    p = check_params(p)
    if not is_case1(p.a, eps) and p.a > 1.0:
        return TimeDomain(0.0, p.t_o / (p.a - 1.0), open_upper=True)
    return TimeDomain(0.0, inf, open_upper=True)


def time_domain(p, picture, eps=eps):
    """Forward evolution domain of a picture.

    Parameters
    ----------
    p : Params
        Parameters

    picture : str
        'TO', 'TM' or 'TQ'

    eps : float, optional (default: 1e-12)
        Relative tolerance for a = 1

    Returns
    -------
    domain : TimeDomain
        tprime_domain(p) for TO, [t_o, inf) for TM and TQ
    """
    p = check_params(p)
    if check_picture(picture) == "TO":
        return tprime_domain(p, eps)
    return TimeDomain(p.t_o, inf, open_upper=True)


def check_time_grid(grid, domain):
    """Input validation of a time grid.

    Parameters
    ----------
    grid : array-like, shape (n_steps,)
        Non-decreasing times

    domain : TimeDomain
        Admissible times

    Returns
    -------
    grid : array, shape (n_steps,)
        Validated grid

    Raises
    ------
    ValueError
        If input is invalid
    """
    grid = np.atleast_1d(np.asarray(grid, dtype=np.float64))
    if grid.ndim != 1 or len(grid) == 0:
        raise ValueError("Expected non-empty one-dimensional time grid, got "
                         "array-like object with shape %s" % (grid.shape,))
    finite = np.isfinite(grid)
    if not np.all(finite):
        index = int(np.argmin(finite))
        raise ValueError("Expected finite time grid, got %g at index %d"
                         % (grid[index], index))
    if np.any(np.diff(grid) < 0.0):
        raise ValueError("Expected monotone time grid")
    if not domain.contains(grid[0]) or not domain.contains(grid[-1]):
        raise ValueError("Expected time grid inside %r, got [%g, %g]"
                         % (domain, grid[0], grid[-1]))
    return grid
