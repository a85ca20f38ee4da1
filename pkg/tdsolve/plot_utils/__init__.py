"""Utilities for plotting traces.

See :doc:`pictures` for more information.
"""
import warnings
try:
    import matplotlib.pyplot as plt
    from ._layout import make_trace_axis
    from ._plot_functions import (
        plot_expectation_values, plot_phase_space, plot_trace_figure)

    __all__ = [
        "make_trace_axis",
        "plot_expectation_values", "plot_phase_space", "plot_trace_figure"
    ]
except ImportError:
    warnings.warn("Matplotlib is not installed, visualization is not "
                  "available")
