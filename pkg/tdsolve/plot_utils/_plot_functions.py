"""Plotting functions."""
import numpy as np
import matplotlib.pyplot as plt
from ._layout import make_trace_axis
from ..observables import trace_to_array


def plot_expectation_values(points, ax=None, uncertainty=False,
                            alpha=0.3):
    """Plot <x> and <p> against time.

    Parameters
    ----------
    points : list of PhasePoint
        Trace

    ax : Matplotlib axis, optional (default: None)
        If the axis is None, a new axis will be created

    uncertainty : bool, optional (default: False)
        Shade <x> +- dx and <p> +- dp

    alpha : float, optional (default: 0.3)
        Alpha value of the shaded uncertainty bands

    Returns
    -------
    ax : Matplotlib axis
        New or old axis
    """
    if ax is None:
        ax = make_trace_axis(ylabel="expectation value")
    array = trace_to_array(points)
    t = array[:, 0]
    for column, label in ((1, "<x>"), (2, "<p>")):
        line, = ax.plot(t, array[:, column], label=label)
        if uncertainty and not np.any(np.isnan(array[:, column + 2])):
            ax.fill_between(t, array[:, column] - array[:, column + 2],
                            array[:, column] + array[:, column + 2],
                            color=line.get_color(), alpha=alpha)
    ax.legend(loc="best")
    return ax


def plot_phase_space(points, ax=None, c="k", **kwargs):
    """Plot the trajectory (<x>, <p>).

    Parameters
    ----------
    points : list of PhasePoint
        Trace

    ax : Matplotlib axis, optional (default: None)
        If the axis is None, a new axis will be created

    c : str, optional (default: black)
        Color of the trajectory

    kwargs : dict, optional (default: {})
        Additional arguments for the plotting functions, e.g. alpha

    Returns
    -------
    ax : Matplotlib axis
        New or old axis
    """
    if ax is None:
        ax = make_trace_axis(xlabel="<x>", ylabel="<p>")
    array = trace_to_array(points)
    ax.plot(array[:, 1], array[:, 2], c=c, **kwargs)
    ax.scatter(array[:1, 1], array[:1, 2], c=c, marker="o")
    return ax


def plot_trace_figure(points, filename):
    """Save expectation values and phase-space trajectory to a file.

    Parameters
    ----------
    points : list of PhasePoint
        Trace

    filename : str
        Output file, the format follows from the extension
    """
    fig = plt.figure(figsize=(10, 4))
    try:
        plot_expectation_values(
            points, make_trace_axis(121, ylabel="expectation value"))
        plot_phase_space(points, make_trace_axis(122, "<x>", "<p>"))
        fig.tight_layout()
        fig.savefig(filename)
    finally:
        plt.close(fig)
