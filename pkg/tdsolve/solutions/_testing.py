"""Testing utilities."""
import numpy as np
from numpy.testing import assert_array_almost_equal


def assert_wronskian(xi, xi_dot, *args, **kwargs):
    """Raise an assertion if xi conj(xi_dot) - xi_dot conj(xi) is not -i.

    See numpy.testing.assert_array_almost_equal for a more detailed
    documentation of the other parameters.

    Parameters
    ----------
    xi : complex
        Mode function

    xi_dot : complex
        Derivative of the mode function

    args : tuple
        Positional arguments that will be passed to
        `assert_array_almost_equal`

    kwargs : dict
        Positional arguments that will be passed to
        `assert_array_almost_equal`
    """
    W = xi * np.conj(xi_dot) - xi_dot * np.conj(xi)
    assert_array_almost_equal(np.array([W.real, W.imag]),
                              np.array([0.0, -1.0]), *args, **kwargs)


def assert_complex_almost_equal(actual, desired, *args, **kwargs):
    """Raise an assertion if two complex numbers differ.

    See numpy.testing.assert_array_almost_equal for a more detailed
    documentation of the other parameters.

    Parameters
    ----------
    actual : complex
        Computed value

    desired : complex
        Expected value

    args : tuple
        Positional arguments that will be passed to
        `assert_array_almost_equal`

    kwargs : dict
        Positional arguments that will be passed to
        `assert_array_almost_equal`
    """
    assert_array_almost_equal(
        np.array([np.real(actual), np.imag(actual)]),
        np.array([np.real(desired), np.imag(desired)]), *args, **kwargs)


def assert_solution_functions_consistent(functions, *args, **kwargs):
    """Raise an assertion if the bilinears do not match the mode function.

    Checks phi1 = xi^2, phi2 = conj(phi1), phi3 = 2 |xi|^2 > 0 and the
    Wronskian.

    Parameters
    ----------
    functions : SolutionFunctions
        Mode function and bilinears

    args : tuple
        Positional arguments that will be passed to
        `assert_array_almost_equal`

    kwargs : dict
        Positional arguments that will be passed to
        `assert_array_almost_equal`
    """
    xi = functions.xi
    assert functions.phi3 > 0.0
    assert_complex_almost_equal(functions.phi1, xi * xi, *args, **kwargs)
    assert_complex_almost_equal(functions.phi2, np.conj(xi * xi),
                                *args, **kwargs)
    assert_array_almost_equal(functions.phi3, 2.0 * abs(xi) ** 2,
                              *args, **kwargs)
    assert_wronskian(xi, functions.xi_dot, *args, **kwargs)
