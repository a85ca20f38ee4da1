"""Verification suites that cross-check the closed forms.

Every suite draws parameters from all regimes with a seeded
np.random.RandomState (MT19937), compares closed forms with identities or
with the numerical oracle and records the largest residual per check.
"""
import logging
import math
import time as _time
from collections import OrderedDict
import numpy as np
from . import special_functions as sf
from .regimes import (regimes, random_params, random_time,
                      pictures, tprime_domain, is_case1, Params, classify,
                      max_order)
from .time_maps import t_prime, t_from_tprime, g2, nu
from .solutions import (to_xi, tm_xi, tq_xi, mode_pair, initial_time,
                        tq_potential)
from .observables import (SqueezeState, expval_x, expval_p, uncertainties,
                          hankel_form_uncertainties, trace, zero_crossings,
                          lobe_maxima)
from .lie_algebra import (build_generators, algebra_residuals,
                          jacobi_residual)
from .oracle import (IntegratorConfig, integrate_gamma, integrate_classical,
                     classical_rhs, convergence_order, wronskian_drift)


logger = logging.getLogger(__name__)

SAMPLER = "MT19937"


class SuiteResult(object):
    """Outcome of a verification suite.

    Parameters
    ----------
    name : str
        Suite name

    checks : OrderedDict
        Maps check labels to pairs (largest residual, tolerance)

    n_checks : int
        Number of evaluated checks

    report : dict, optional
        Reported quantities that do not affect the outcome
    """
    def __init__(self, name, checks, n_checks, report=None):
        self.name = name
        self.checks = checks
        self.n_checks = n_checks
        self.report = OrderedDict() if report is None else report
        self.elapsed = 0.0

    @property
    def passed(self):
        return all(residual <= tolerance
                   for residual, tolerance in self.checks.values())

    @property
    def failures(self):
        return [label for label, (residual, tolerance) in self.checks.items()
                if not residual <= tolerance]

    @property
    def worst(self):
        """Largest ratio of residual to tolerance."""
        ratios = [residual / tolerance if tolerance > 0.0 else
                  (0.0 if residual == 0.0 else np.inf)
                  for residual, tolerance in self.checks.values()]
        return max(ratios) if ratios else 0.0

    def as_dict(self):
        return OrderedDict([
            ("name", self.name), ("passed", self.passed),
            ("worst", _finite_or_none(self.worst)),
            ("n_checks", self.n_checks), ("elapsed", self.elapsed),
            ("checks", OrderedDict(
                (label, OrderedDict([("residual", _finite_or_none(r)),
                                     ("tolerance", t)]))
                for label, (r, t) in self.checks.items())),
            ("report", self.report)])

    def __repr__(self):
        return "SuiteResult(name=%r, passed=%r, worst=%g)" % (
            self.name, self.passed, self.worst)


def _finite_or_none(value):
    value = float(value)
    return value if math.isfinite(value) else None


class _Checks(object):
    """Collects the largest residual per check label."""
    def __init__(self, tol_scale):
        self.tol_scale = tol_scale
        self.checks = OrderedDict()
        self.n_checks = 0

    def add(self, label, residual, tolerance):
        self.n_checks += 1
        residual = float(residual)
        if math.isnan(residual):
            residual = np.inf
        previous = self.checks.get(label, (0.0, None))[0]
        self.checks[label] = (max(previous, residual),
                              tolerance * self.tol_scale)

    def result(self, name, report=None):
        return SuiteResult(name, self.checks, self.n_checks, report)


def _relative(error, scale):
    return abs(error) / max(abs(scale), 1e-300)


def natural_horizon(p, units=3.0):
    """Offset covering a number of natural time units of the TO picture.

    The natural unit is t_o divided by the logarithmic growth rate of g2 at
    the initial time (at least 1). Bounded domains are restricted to 80 %
    of their length.
    """
    if is_case1(p.a):
        rate = abs(1.0 + p.b)
    else:
        rate = abs(p.a + p.b)
    unit = p.t_o / max(1.0, rate)
    return min(units * unit, 0.8 * tprime_domain(p).length)


def _rate(picture, p, time):
    if picture == "TO":
        if is_case1(p.a):
            growth = abs(1.0 + p.b) / p.t_o
        else:
            growth = abs(p.a + p.b) / (p.t_o + (1.0 - p.a) * time)
        return math.sqrt(2.0 * g2(time, p)) + growth
    rate = math.sqrt(tq_potential(time, p)) + 1.0 / time
    if picture == "TQ":
        rate += 0.5 * abs(p.a) / time
    return rate


def oracle_step(picture, p, start, end):
    """Integrator step resolving the fastest rate on [start, end]."""
    rate = max(_rate(picture, p, start), _rate(picture, p, end))
    return min(1e-3, 0.01 / rate)


def _end_time(picture, p, offset):
    if picture == "TO":
        return offset
    return t_from_tprime(offset, p)


def _draws(random_state, samples):
    for regime in regimes:
        for _ in range(samples):
            yield regime, random_params(regime, random_state)


def _random_squeeze(random_state):
    return SqueezeState(random_state.uniform(-1.0, 1.0),
                        random_state.uniform(-1.0, 1.0),
                        random_state.uniform(0.0, 1.0),
                        random_state.uniform(0.0, 2.0 * math.pi))


def _random_bessel_point(random_state, negative):
    """Order and argument inside the range where the identities hold.

    Arguments are log-uniform in [0.05, 500]. Negative non-integer orders
    are redrawn until the identities at mu - 1 keep a precision of 1e-10.
    """
    top = max_order - 1.0
    while True:
        z = math.exp(random_state.uniform(math.log(0.05), math.log(500.0)))
        if not negative:
            return random_state.uniform(0.0, top), z
        mu = random_state.uniform(-top, 0.0)
        if sf.identity_precision(mu - 1.0, z) <= 1e-10:
            return mu, z


def check_special_functions(random_state, samples, tol_scale=1.0):
    """Recurrences, Wronskians, cross products and half-order forms."""
    checks = _Checks(tol_scale)
    n_points = max(samples, 8)
    for i in range(2 * n_points):
        mu, z = _random_bessel_point(random_state, negative=i % 2 == 1)
        for kind in ("J", "Y"):
            lower = sf.bessel_function(mu - 1.0, z, kind)
            value = sf.bessel_function(mu, z, kind)
            upper = sf.bessel_function(mu + 1.0, z, kind)
            scale = max(abs(lower), abs(upper), abs(2.0 * mu / z * value))
            checks.add("recurrence", _relative(
                lower + upper - 2.0 * mu / z * value, scale), 1e-8)
            derivative = sf.bessel_derivative(mu, z, kind)
            checks.add("derivative", _relative(
                derivative - (mu / z * value - upper),
                max(abs(derivative), scale)), 1e-8)
        reference = 2.0 / (math.pi * z)
        checks.add("wronskian_jy", _relative(
            sf.wronskian_jy(mu, z) - reference, reference), 1e-8)
        checks.add("wronskian_hankel", _relative(
            sf.wronskian_hankel(mu, z) + 2j * reference, 2.0 * reference),
            1e-8)
        cross = (sf.bessel_j(mu, z) * sf.bessel_y(mu - 1.0, z) -
                 sf.bessel_j(mu - 1.0, z) * sf.bessel_y(mu, z))
        checks.add("cross_product", _relative(cross - reference, reference),
                   1e-8)
        if z <= 10.0:
            j = sf.bessel_j(mu, z)
            checks.add("series", _relative(
                sf.bessel_j_series(mu, z) - j, max(1.0, abs(j))), 1e-8)

    for _ in range(n_points):
        z = math.exp(random_state.uniform(math.log(0.05), math.log(500.0)))
        amplitude = math.sqrt(2.0 / (math.pi * z))
        checks.add("half_order", max(
            abs(sf.bessel_j(0.5, z) - amplitude * math.sin(z)),
            abs(sf.bessel_y(0.5, z) + amplitude * math.cos(z)),
            abs(sf.bessel_j(-0.5, z) - amplitude * math.cos(z))) / amplitude,
            1e-10)
    return checks.result("special_functions")


def check_wronskian(random_state, samples, tol_scale=1.0):
    """W(A, conj(A)) = -i for the mode pair of every picture."""
    checks = _Checks(tol_scale)
    for regime, p in _draws(random_state, 1):
        for picture in pictures:
            key = classify(p, picture)
            for _ in range(samples):
                time = random_time(p, picture, random_state)
                A, B = mode_pair(picture, p, time, key)
                W = A * np.conj(B) - B * np.conj(A)
                checks.add("%s/%s" % (picture, regime), abs(W + 1j), 1e-8)
    return checks.result("wronskian")


def check_ode(random_state, samples, tol_scale=1.0):
    """to_xi against RK4 integration of the mode equation."""
    checks = _Checks(tol_scale)
    for regime, p in _draws(random_state, max(1, samples // 25)):
        horizon = natural_horizon(p)
        grid = np.linspace(0.0, horizon, 11)
        key = classify(p, "TO")
        closed = np.array([to_xi(offset, p, key) for offset in grid])
        config = IntegratorConfig(oracle_step("TO", p, 0.0, horizon))
        numeric = integrate_gamma(p, closed[0], grid, config)
        for column, label in ((0, "xi"), (1, "xi_dot")):
            error = np.max(np.abs(numeric[:, column] - closed[:, column]))
            scale = np.max(np.abs(closed[:, column]))
            checks.add("%s/%s" % (label, regime), _relative(error, scale),
                       1e-7)

    orders = OrderedDict()
    for label, p, t_end in (("harmonic", Params(1.0, -1.0, 1.0, 1.0), 3.0),
                            ("growing", Params(1.0, 1.0, 1.0, 1.0), 1.0)):
        orders[label] = convergence_order(p, to_xi(0.0, p), t_end)
        checks.add("order/%s" % label, abs(orders[label] - 4.0), 0.3)
    drift = wronskian_drift(Params(1.0, -1.0, 1.0, 1.0),
                            np.linspace(0.0, 2.0 * math.pi, 5),
                            IntegratorConfig(1e-3))
    checks.add("wronskian_drift", drift, 1e-9)
    return checks.result("ode", OrderedDict([
        ("convergence_order", orders), ("wronskian_drift", drift)]))


def check_composition(random_state, samples, tol_scale=1.0):
    """TM functions are TO functions of t'(t), TQ functions dilated TM."""
    checks = _Checks(tol_scale)
    for regime, p in _draws(random_state, 1):
        for _ in range(samples):
            t = random_time(p, "TM", random_state)
            xi_hat, xi_hat_dot = tm_xi(t, p)
            xi, xi_dot = to_xi(t_prime(t, p), p)
            checks.add("tm=to/%s" % regime, max(
                _relative(xi_hat - xi, abs(xi)),
                _relative(xi_hat_dot - xi_dot, abs(xi_dot))), 1e-9)
            Xi_P, Xi_X = tq_xi(t, p)
            dilation = math.exp(nu(t, p))
            checks.add("tq=tm/%s" % regime, max(
                _relative(Xi_P - xi_hat * dilation, abs(Xi_P)),
                _relative(Xi_X - xi_hat_dot / dilation, abs(Xi_X))), 1e-9)
    return checks.result("composition")


def _expectation(picture, p, state, time, key):
    return np.array([expval_x(picture, p, state, time, key),
                     expval_p(picture, p, state, time, key)])


def check_classical(random_state, samples, tol_scale=1.0):
    """Expectation values follow the classical equations of motion."""
    checks = _Checks(tol_scale)
    for regime, p in _draws(random_state, 1):
        for picture in pictures:
            key = classify(p, picture)
            rhs = classical_rhs(picture, p)
            state = _random_squeeze(random_state)
            start = initial_time(picture, p)
            end = _end_time(picture, p, natural_horizon(p))
            for _ in range(samples):
                time = random_state.uniform(start + 0.05 * (end - start), end)
                h = 1e-4 / _rate(picture, p, time)
                here = _expectation(picture, p, state, time, key)
                difference = (
                    _expectation(picture, p, state, time + h, key) -
                    _expectation(picture, p, state, time - h, key)) / (2 * h)
                velocity = rhs(time, here)
                checks.add("eom/%s/%s" % (picture, regime), _relative(
                    np.linalg.norm(difference - velocity),
                    np.linalg.norm(velocity) + np.linalg.norm(here)), 1e-6)

    for regime, p in _draws(random_state, max(1, samples // 25)):
        for picture in pictures:
            state = _random_squeeze(random_state)
            start = initial_time(picture, p)
            end = _end_time(picture, p, natural_horizon(p))
            grid = np.linspace(start, end, 6)
            config = IntegratorConfig(oracle_step(picture, p, start, end))
            numeric = integrate_classical(
                picture, p, (state.x_o, state.p_o), grid, config)
            numeric = np.array([[point.x, point.p] for point in numeric])
            closed = np.array([_expectation(picture, p, state, t, None)
                               for t in grid])
            checks.add("oracle/%s/%s" % (picture, regime), _relative(
                np.max(np.abs(numeric - closed)), np.max(np.abs(closed))),
                1e-7)
    return checks.result("classical")


def check_initial(random_state, samples, tol_scale=1.0):
    """<x> = x_o and <p> = p_o at the initial time."""
    checks = _Checks(tol_scale)
    for regime, p in _draws(random_state, max(1, samples // 10)):
        for picture in pictures:
            state = _random_squeeze(random_state)
            here = _expectation(picture, p, state, initial_time(picture, p),
                                None)
            checks.add("%s/%s" % (picture, regime), np.max(np.abs(
                here - np.array([state.x_o, state.p_o]))), 1e-12)
    return checks.result("initial")


def check_commutators(random_state, samples, tol_scale=1.0):
    """[M, J+-] = +-J+- and [J-, J+] = I for all regimes and pictures."""
    checks = _Checks(tol_scale)
    n_times = min(samples, 20)
    for regime, p in _draws(random_state, 1):
        for picture in pictures:
            key = classify(p, picture)
            for on_shell in (True, False):
                M, J_minus, J_plus = build_generators(picture, p, on_shell,
                                                      key)
                label = "%s/%s/%s" % (picture, regime,
                                      "on" if on_shell else "off")
                for _ in range(n_times):
                    t = random_time(p, picture, random_state)
                    scale = max(1.0, np.max(np.abs(M.coefficients(t))))
                    residuals = algebra_residuals(M, J_minus, J_plus, t)
                    checks.add(label, max(residuals.values()) / scale, 1e-7)

    for regime in ("case2_b_gt", "case1_critical"):
        p = random_params(regime, random_state)
        M, J_minus, J_plus = build_generators("TM", p)
        for _ in range(n_times):
            t = random_time(p, "TM", random_state)
            checks.add("jacobi/TM/%s" % regime,
                       jacobi_residual(M, J_minus, J_plus, t), 1e-6)
    return checks.result("commutators")


def check_uncertainty(random_state, samples, tol_scale=1.0):
    """Uncertainty products, the coherent limit and Bessel-product forms."""
    checks = _Checks(tol_scale)
    minimum = np.inf
    for regime, p in _draws(random_state, 1):
        for picture in pictures:
            key = classify(p, picture)
            for _ in range(samples):
                time = random_time(p, picture, random_state)
                state = _random_squeeze(random_state)
                _, _, product = uncertainties(picture, p, state, time, key)
                minimum = min(minimum, product)
                checks.add("product/%s/%s" % (picture, regime),
                           max(0.0, 0.25 - product), 1e-12)
                coherent = SqueezeState(state.x_o, state.p_o, 0.0,
                                        state.theta)
                dx2, dp2, _ = uncertainties(picture, p, coherent, time, key)
                A, B = mode_pair(picture, p, time, key)
                checks.add("coherent/%s/%s" % (picture, regime), max(
                    abs(dx2 - abs(A) ** 2), abs(dp2 - abs(B) ** 2)), 1e-10)

    harmonic = random_params("case1_critical", random_state)
    for _ in range(samples):
        offset = random_time(harmonic, "TO", random_state)
        _, _, product = uncertainties("TO", harmonic,
                                      SqueezeState(1.0, 0.0), offset)
        checks.add("minimum/TO/case1_critical", abs(product - 0.25), 1e-10)

    product_residual = 0.0
    dx2_ratios = []
    dp2_ratios = []
    p = random_params("case1_b_gt", random_state)
    for _ in range(min(samples, 10)):
        t = random_time(p, "TM", random_state)
        state = _random_squeeze(random_state)
        dx2, dp2, product = uncertainties("TM", p, state, t)
        hankel = hankel_form_uncertainties(p, state, t)
        product_residual = max(product_residual,
                               _relative(hankel[2] - product, product))
        dx2_ratios.append(hankel[0] / dx2)
        dp2_ratios.append(hankel[1] / dp2)
    logger.info("Hankel forms: product residual %g, dx2 ratio in "
                "[%g, %g], dp2 ratio in [%g, %g]", product_residual,
                min(dx2_ratios), max(dx2_ratios),
                min(dp2_ratios), max(dp2_ratios))
    return checks.result("uncertainty", OrderedDict([
        ("minimum_product", minimum),
        ("hankel_product_residual", product_residual),
        ("hankel_dx2_ratio", [min(dx2_ratios), max(dx2_ratios)]),
        ("hankel_dp2_ratio", [min(dp2_ratios), max(dp2_ratios)])]))


def figure_trace(b, n_points=2000):
    """Trace of TM-{1;b;w=2;t_o=1;x_o=1;p_o=1} on 1 <= t <= 50."""
    return trace("TM", Params(1.0, b, 2.0, 1.0), SqueezeState(1.0, 1.0),
                 np.linspace(1.0, 50.0, n_points))


def check_figures(random_state, samples, tol_scale=1.0):
    """Envelope and frequency behaviour of TM systems with a = 1, w = 2."""
    checks = _Checks(tol_scale)
    crossings = OrderedDict()
    for b in (1.0, -0.5):
        x = np.array([point.x for point in figure_trace(b)])
        crossings["b=%g" % b] = len(zero_crossings(x))
        maxima = lobe_maxima(x)
        increase = 0.0
        if len(maxima) > 1:
            increase = max(0.0, np.max(np.diff(maxima) / maxima[:-1]))
        checks.add("envelope/b=%g" % b, increase, 1e-9)
    checks.add("frequency", 0.0 if crossings["b=1"] > crossings["b=-0.5"]
               else np.inf, 0.0)
    return checks.result("figures", OrderedDict([
        ("zero_crossings", crossings)]))


SUITES = OrderedDict([
    ("special_functions", check_special_functions),
    ("wronskian", check_wronskian),
    ("ode", check_ode),
    ("composition", check_composition),
    ("classical", check_classical),
    ("initial", check_initial),
    ("commutators", check_commutators),
    ("uncertainty", check_uncertainty),
    ("figures", check_figures),
])


def run_suites(names=None, seed=0, samples=100, tol_scale=1.0):
    """Run verification suites.

    Parameters
    ----------
    names : list of str, optional (default: all suites)
        Suites to run

    seed : int, optional (default: 0)
        Seed of the MT19937 sampler, each suite starts from the same seed

    samples : int, optional (default: 100)
        Sampled times per regime of the pointwise checks. Integration checks
        use samples // 25 parameter draws per regime (at least one).

    tol_scale : float, optional (default: 1)
        Factor applied to every tolerance

    Returns
    -------
    results : list of SuiteResult
        One result per suite. A suite that raises ValueError or
        ArithmeticError fails with the single check 'error'.
    """
    if names is None:
        names = list(SUITES.keys())
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError("Expected suite names in %r, got %r"
                         % (list(SUITES.keys()), unknown))
    if samples < 1:
        raise ValueError("Expected samples >= 1, got %r" % samples)
    if not tol_scale > 0.0:
        raise ValueError("Expected tolerance scale > 0, got %r" % tol_scale)

    results = []
    for name in names:
        logger.info("Running suite '%s' (seed=%d, samples=%d)",
                    name, seed, samples)
        start = _time.perf_counter()
        try:
            result = SUITES[name](np.random.RandomState(seed), samples,
                                  tol_scale)
        except (ValueError, ArithmeticError) as e:
            logger.error("Suite '%s' raised %s: %s",
                         name, type(e).__name__, e)
            result = SuiteResult(
                name, OrderedDict([("error", (np.inf, 0.0))]), 0,
                OrderedDict([("error", "%s: %s" % (type(e).__name__, e))]))
        result.elapsed = _time.perf_counter() - start
        logger.debug("Suite '%s': %d checks, worst residual/tolerance %g, "
                     "%.2f s", name, result.n_checks, result.worst,
                     result.elapsed)
        for label in result.failures:
            residual, tolerance = result.checks[label]
            logger.warning("Check '%s/%s' failed: residual %g > %g",
                           name, label, residual, tolerance)
        results.append(result)
    return results
