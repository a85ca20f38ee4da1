"""Closed-form mode functions of the TO, TM and TQ pictures.

See :doc:`pictures` for more information.
"""
from ._types import AuxVariables, SolutionFunctions
from ._rows import hankel_order
from ._to import (
    to_aux, to_solution_functions, to_xi, to_phi, to_real_pair,
    to_hankel_form)
from ._tm import tm_aux, tm_solution_functions, tm_xi, tm_phi
from ._tq import tq_xi, tq_coeffs, tq_potential
from ._modes import initial_time, mode_pair, mode_rates
from ._testing import (
    assert_wronskian, assert_complex_almost_equal,
    assert_solution_functions_consistent)


__all__ = [
    "AuxVariables", "SolutionFunctions", "hankel_order",
    "to_aux", "to_solution_functions", "to_xi", "to_phi", "to_real_pair",
    "to_hankel_form",
    "tm_aux", "tm_solution_functions", "tm_xi", "tm_phi",
    "tq_xi", "tq_coeffs", "tq_potential",
    "initial_time", "mode_pair", "mode_rates",
    "assert_wronskian", "assert_complex_almost_equal",
    "assert_solution_functions_consistent"
]
