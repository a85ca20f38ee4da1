"""Layout utilities for matplotlib."""
import matplotlib.pyplot as plt
from matplotlib.ticker import MaxNLocator


def make_trace_axis(pos=111, xlabel="t", ylabel=None, n_ticks=6):
    """Generate new 2D axis for a trace.

    Parameters
    ----------
    pos : int, optional (default: 111)
        Position indicator (nrows, ncols, plot_number)

    xlabel : str, optional (default: 't')
        Label of the horizontal axis

    ylabel : str, optional (default: None)
        Label of the vertical axis

    n_ticks : int, optional (default: 6)
        Number of ticks on each axis

    Returns
    -------
    ax : Matplotlib axis
        New axis
    """
    ax = plt.subplot(pos)
    ax.set_xlabel(xlabel)
    if ylabel is not None:
        ax.set_ylabel(ylabel)
    ax.xaxis.set_major_locator(MaxNLocator(n_ticks))
    ax.yaxis.set_major_locator(MaxNLocator(n_ticks))
    ax.grid(True, alpha=0.3)
    return ax
