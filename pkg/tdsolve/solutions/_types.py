"""Value types of the solution functions."""


class AuxVariables(object):
    """Auxiliary variables of the closed-form solutions.

    Variables that do not apply to a regime are None.

    Parameters
    ----------
    sigma : float or None
        Bessel argument for a = 1

    v : float or None
        Scaled time for a != 1

    tau : float or None
        Bessel argument for a != 1

    q : float or None
        (b - a + 2) / (1 - a)

    Delta : float or None
        sqrt(|1 - 4 w^2 t_o^2 / (1 - a)^2|)

    chi : float or None
        (1 - a) ln(t/t_o) / 2, only in the TM and TQ pictures
    """
    def __init__(self, sigma=None, v=None, tau=None, q=None, Delta=None,
                 chi=None):
        self.sigma = sigma
        self.v = v
        self.tau = tau
        self.q = q
        self.Delta = Delta
        self.chi = chi

    def __repr__(self):
        fields = ["%s=%r" % (name, getattr(self, name))
                  for name in ("sigma", "v", "tau", "q", "Delta", "chi")
                  if getattr(self, name) is not None]
        return "AuxVariables(%s)" % ", ".join(fields)


class SolutionFunctions(object):
    """Complex mode function and the bilinears built from it.

    Parameters
    ----------
    xi : complex
        Mode function normalized to the Wronskian -i

    xi_dot : complex
        Derivative of the mode function with respect to t'

    g2 : float
        Potential coefficient at the same time, used for the second
        derivative xi'' = -2 g2 xi
    """
    def __init__(self, xi, xi_dot, g2):
        self.xi = complex(xi)
        self.xi_dot = complex(xi_dot)
        self.g2 = float(g2)

    @property
    def phi1(self):
        return self.xi * self.xi

    @property
    def phi2(self):
        return self.phi1.conjugate()

    @property
    def phi3(self):
        return 2.0 * abs(self.xi) ** 2

    @property
    def phi3_dot(self):
        return 4.0 * (self.xi.conjugate() * self.xi_dot).real

    @property
    def phi3_ddot(self):
        return 4.0 * abs(self.xi_dot) ** 2 - 8.0 * self.g2 * abs(self.xi) ** 2

    @property
    def wronskian(self):
        """xi conj(xi_dot) - xi_dot conj(xi), equal to -i."""
        return (self.xi * self.xi_dot.conjugate() -
                self.xi_dot * self.xi.conjugate())

    def phi(self):
        """Tuple (phi1, phi2, phi3, phi3_dot, phi3_ddot)."""
        return (self.phi1, self.phi2, self.phi3, self.phi3_dot,
                self.phi3_ddot)

    def __repr__(self):
        return "SolutionFunctions(xi=%r, xi_dot=%r)" % (self.xi, self.xi_dot)
