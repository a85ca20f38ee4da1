"""Oscillator symmetry algebra over the operator basis T, D, X^2, P^2, X, P, I.

T stands for i d/dt, D for (XP + PX) / 2 and I for the identity. An
operator is a vector of time-dependent coefficients over this basis.
Commutators of time-independent basis elements follow from [X, P] = i I,
and [T, c(t) A] = i c'(t) A for every basis element A.
"""
import numpy as np
from .regimes import check_params, check_picture, classify
from .time_maps import g2_function, g2_dot, dtprime_dt
from .solutions import mode_rates, tq_potential


BASIS = ("T", "D", "X2", "P2", "X", "P", "I")
T, D, X2, P2, X, P, I = range(len(BASIS))


def _structure_constants():
    f = np.zeros((len(BASIS), len(BASIS), len(BASIS)), dtype=np.complex128)
    relations = [
        (D, X, X, -1j), (D, P, P, 1j),
        (D, X2, X2, -2j), (D, P2, P2, 2j),
        (X2, P2, D, 4j), (X2, P, X, 2j), (P2, X, P, -2j),
        (X, P, I, 1j)]
    for i, j, k, value in relations:
        f[i, j, k] = value
        f[j, i, k] = -value
    return f


STRUCTURE = _structure_constants()


class OperatorCoeffs(object):
    """Operator with time-dependent coefficients over BASIS.

    Parameters
    ----------
    coefficients_fn : callable
        Maps time to an array of shape (7,) with the coefficients

    derivatives_fn : callable
        Maps time to an array of shape (7,) with the time derivatives of
        the coefficients

    name : str, optional (default: '')
        Name used in reports
    """
    def __init__(self, coefficients_fn, derivatives_fn, name=""):
        self.coefficients_fn = coefficients_fn
        self.derivatives_fn = derivatives_fn
        self.name = name

    def coefficients(self, t):
        return np.asarray(self.coefficients_fn(t), dtype=np.complex128)

    def derivatives(self, t):
        return np.asarray(self.derivatives_fn(t), dtype=np.complex128)

    def evaluate(self, t):
        """Coefficients and their derivatives at time t."""
        return self.coefficients(t), self.derivatives(t)

    def __repr__(self):
        return "OperatorCoeffs(name=%r)" % self.name


def coefficient_dict(coefficients):
    """Map basis names to the nonzero coefficients of an operator."""
    return {name: value for name, value in zip(BASIS, coefficients)
            if value != 0.0}


def _vector(**values):
    v = np.zeros(len(BASIS), dtype=np.complex128)
    for name, value in values.items():
        v[BASIS.index(name)] = value
    return v


def _schroedinger_operator(picture, p):
    """2 (T - H) and its derivative as functions of time.

    Returns the coefficient k of -P^2 as well, so that the on-shell
    generator can cancel the P^2 term.
    """
    if picture == "TO":
        g2_of = g2_function(p)

        def operator(time):
            S = _vector(T=2.0, P2=-1.0, X2=-2.0 * g2_of(time))
            dS = _vector(X2=-2.0 * g2_dot(time, p))
            return S, dS, 1.0, 0.0
    elif picture == "TM":
        def operator(time):
            k = dtprime_dt(time, p)
            potential = p.omega ** 2 * (time / p.t_o) ** p.b
            S = _vector(T=2.0, P2=-k, X2=-potential)
            dS = _vector(P2=p.a * k / time,
                         X2=-p.b * potential / time)
            return S, dS, k, -p.a * k / time
    else:
        def operator(time):
            w = tq_potential(time, p)
            S = _vector(T=2.0, D=-p.a / time, P2=-1.0, X2=-w)
            dS = _vector(D=p.a / time ** 2, X2=-(p.b - p.a) * w / time)
            return S, dS, 1.0, 0.0
    return operator


def build_generators(picture, p, on_shell=True, key=None):
    """Symmetry generators M, J_- and J_+ of a picture.

    With the mode pair (A, B) of the picture,

    * J_- = i A P - i B X,
    * J_+ = -i conj(A) P + i conj(B) X,
    * N = (J_+ J_- + J_- J_+) / 2
      = |A|^2 P^2 - 2 Re(conj(A) B) D + |B|^2 X^2.

    The on-shell generator is M = N + f S with the Schroedinger operator
    S = 2 (T - H) and f chosen to cancel P^2, which leaves T, D and X^2
    terms (the T coefficient is phi3 in the TO picture). Both forms satisfy
    [J_-, J_+] = I and [M, J_+-] = +-J_+-.

    Parameters
    ----------
    picture : str
        'TO', 'TM' or 'TQ'

    p : Params
        Parameters

    on_shell : bool, optional (default: True)
        Return M = N + f S instead of N

    key : SystemKey, optional (default: classify(p, picture))
        Regime of p

    Returns
    -------
    M : OperatorCoeffs
        Number-like generator

    J_minus : OperatorCoeffs
        Lowering generator

    J_plus : OperatorCoeffs
        Raising generator
    """
    picture = check_picture(picture)
    p = check_params(p)
    if key is None:
        key = classify(p, picture)
    shell = _schroedinger_operator(picture, p)

    def rates(time):
        return mode_rates(picture, p, time, key)

    def j_minus(time):
        A, B, _, _ = rates(time)
        return _vector(P=1j * A, X=-1j * B)

    def j_minus_dot(time):
        _, _, A_dot, B_dot = rates(time)
        return _vector(P=1j * A_dot, X=-1j * B_dot)

    def j_plus(time):
        A, B, _, _ = rates(time)
        return _vector(P=-1j * np.conj(A), X=1j * np.conj(B))

    def j_plus_dot(time):
        _, _, A_dot, B_dot = rates(time)
        return _vector(P=-1j * np.conj(A_dot), X=1j * np.conj(B_dot))

    def off_shell(time):
        A, B, A_dot, B_dot = rates(time)
        N = _vector(P2=abs(A) ** 2, D=-2.0 * (np.conj(A) * B).real,
                    X2=abs(B) ** 2)
        dN = _vector(
            P2=2.0 * (np.conj(A) * A_dot).real,
            D=-2.0 * (np.conj(A_dot) * B + np.conj(A) * B_dot).real,
            X2=2.0 * (np.conj(B) * B_dot).real)
        return N, dN, A, A_dot

    def m(time):
        N, _, A, _ = off_shell(time)
        if not on_shell:
            return N
        S, _, k, _ = shell(time)
        return N + abs(A) ** 2 / k * S

    def m_dot(time):
        _, dN, A, A_dot = off_shell(time)
        if not on_shell:
            return dN
        S, dS, k, k_dot = shell(time)
        f = abs(A) ** 2 / k
        f_dot = (2.0 * (np.conj(A) * A_dot).real / k -
                 abs(A) ** 2 * k_dot / k ** 2)
        return dN + f_dot * S + f * dS

    return (OperatorCoeffs(m, m_dot, "M" if on_shell else "N"),
            OperatorCoeffs(j_minus, j_minus_dot, "J-"),
            OperatorCoeffs(j_plus, j_plus_dot, "J+"))


def commutator(A, B, t):
    """Commutator [A, B] at time t.

    Parameters
    ----------
    A : OperatorCoeffs
        First operator

    B : OperatorCoeffs
        Second operator

    t : float
        Time

    Returns
    -------
    coefficients : array, shape (7,)
        Coefficients of [A, B] over BASIS
    """
    a, da = A.evaluate(t)
    b, db = B.evaluate(t)
    return (np.einsum("i,j,ijk->k", a, b, STRUCTURE) +
            1j * a[T] * db - 1j * b[T] * da)


def commutator_operator(A, B, h=1e-5):
    """Commutator [A, B] as an operator.

    The derivatives of the commutator are central differences with step h.

    Parameters
    ----------
    A : OperatorCoeffs
        First operator

    B : OperatorCoeffs
        Second operator

    h : float, optional (default: 1e-5)
        Step of the central differences

    Returns
    -------
    C : OperatorCoeffs
        Operator [A, B]
    """
    def coefficients(t):
        return commutator(A, B, t)

    def derivatives(t):
        return (commutator(A, B, t + h) - commutator(A, B, t - h)) / (2 * h)

    return OperatorCoeffs(coefficients, derivatives,
                          "[%s, %s]" % (A.name, B.name))


def algebra_residuals(M, J_minus, J_plus, t):
    """Deviations from [M, J_+-] = +-J_+- and [J_-, J_+] = I.

    Parameters
    ----------
    M : OperatorCoeffs
        Number-like generator

    J_minus : OperatorCoeffs
        Lowering generator

    J_plus : OperatorCoeffs
        Raising generator

    t : float
        Time

    Returns
    -------
    residuals : dict
        Maximum absolute coefficient deviation per relation
    """
    identity = _vector(I=1.0)
    return {
        "[M,J-]=-J-": np.max(np.abs(
            commutator(M, J_minus, t) + J_minus.coefficients(t))),
        "[M,J+]=+J+": np.max(np.abs(
            commutator(M, J_plus, t) - J_plus.coefficients(t))),
        "[J-,J+]=I": np.max(np.abs(
            commutator(J_minus, J_plus, t) - identity))}


def jacobi_residual(A, B, C, t, h=1e-5):
    """Maximum coefficient of [A, [B, C]] + [B, [C, A]] + [C, [A, B]]."""
    total = (commutator(A, commutator_operator(B, C, h), t) +
             commutator(B, commutator_operator(C, A, h), t) +
             commutator(C, commutator_operator(A, B, h), t))
    return np.max(np.abs(total))
