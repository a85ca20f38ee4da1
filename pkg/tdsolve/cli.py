"""Command-line interface: classify regimes, export traces, run checks.

Exit codes are 0 on success, 1 when a verification suite fails and 2 for
invalid flags or parameters.
"""
import argparse
import json
import logging
import os
import sys
from collections import OrderedDict
import numpy as np
from . import __version__
from .regimes import (Params, check_params, check_picture, classify,
                      key_string, critical_time, time_domain, tprime_domain,
                      is_case1, pictures)
from .solutions import initial_time
from .observables import SqueezeState, trace, trace_to_array
from .verification import SUITES, SAMPLER, run_suites


logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TRACE_HEADER = "t,x_exp,p_exp,dx,dp,product"
TOLERANCE_VARIABLE = "TDSOLVE_TOL"


def _json_number(value):
    """JSON has no infinity, unbounded values are reported as null."""
    if value is None or not np.isfinite(value):
        return None
    return float(value)


def _domain_dict(domain):
    return OrderedDict([("lower", _json_number(domain.lower)),
                        ("upper", _json_number(domain.upper)),
                        ("open_upper", domain.open_upper)])


def regime_report(p, picture):
    """Machine-readable regime report of a parameter set.

    Parameters
    ----------
    p : Params
        Parameters

    picture : str
        'TO', 'TM' or 'TQ'

    Returns
    -------
    report : OrderedDict
        Regime report with schema_version 1
    """
    p = check_params(p)
    picture = check_picture(picture)
    key = classify(p, picture)
    report = OrderedDict([
        ("schema_version", SCHEMA_VERSION),
        ("picture", picture),
        ("params", OrderedDict(zip(("a", "b", "omega", "t_o"),
                                   p.as_tuple()))),
        ("key", key.notation),
        ("union", key.union_notation),
        ("key_string", key_string(p, key)),
        ("case", key.case),
        ("class", key.regime_class),
        ("subclass", key.subclass),
        ("sign_tag", key.sign_tag),
        ("harmonic", key.harmonic),
        ("time_domain", _domain_dict(time_domain(p, picture))),
        ("tprime_domain", _domain_dict(tprime_domain(p)))])
    if not is_case1(p.a):
        report["critical_time"] = critical_time(p)
    return report


def _format_report(report):
    lines = ["%s%s  %s" % (report["picture"], report["key"],
                           report["key_string"])]
    if report["union"] is not None:
        lines.append("union:        %s%s" % (report["picture"],
                                               report["union"]))
    if report["subclass"] is not None:
        t_o = report["params"]["t_o"]
        lines.append("subclass:     %s (t_o=%g vs |1-a|/2w=%g), sign %+d"
                     % (report["subclass"], t_o, report["critical_time"],
                        report["sign_tag"]))
    if report["harmonic"]:
        lines.append("harmonic:     yes")
    for name in ("time_domain", "tprime_domain"):
        domain = report[name]
        upper = "inf" if domain["upper"] is None else "%g" % domain["upper"]
        lines.append("%-13s [%g, %s)" % (name + ":", domain["lower"], upper))
    return "\n".join(lines)


def cmd_classify(args):
    """Print the regime of a parameter set."""
    report = regime_report(_params(args), args.picture)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(_format_report(report))
    return 0


def cmd_trace(args):
    """Write <x>, <p>, dx, dp and the uncertainty product as CSV."""
    p = _params(args)
    picture = check_picture(args.picture)
    state = SqueezeState(args.x0, args.p0, args.r, args.theta)
    t_start = initial_time(picture, p) if args.t_start is None \
        else args.t_start
    if args.points < 1:
        raise ValueError("Expected --points >= 1, got %r" % args.points)
    grid = np.linspace(t_start, args.t_end, args.points)
    points = trace(picture, p, state, grid)
    logger.info("Evaluated %d points of %s", len(points),
                key_string(p, classify(p, picture)))

    array = trace_to_array(points)
    if args.output is None:
        _write_csv(sys.stdout, array)
    else:
        with open(args.output, "w") as f:
            _write_csv(f, array)
    if args.plot is not None:
        from .plot_utils import plot_trace_figure
        plot_trace_figure(points, args.plot)
    return 0


def _write_csv(f, array):
    np.savetxt(f, array, fmt="%.17g", delimiter=",", header=TRACE_HEADER,
               comments="")


def tolerance_scale(environ=None):
    """Tolerance factor from the environment variable TDSOLVE_TOL."""
    if environ is None:
        environ = os.environ
    value = environ.get(TOLERANCE_VARIABLE)
    if value is None or value.strip() == "":
        return 1.0
    try:
        scale = float(value)
    except ValueError:
        raise ValueError("Expected %s to be a positive number, got %r"
                         % (TOLERANCE_VARIABLE, value))
    if not np.isfinite(scale) or scale <= 0.0:
        raise ValueError("Expected %s to be a positive number, got %r"
                         % (TOLERANCE_VARIABLE, value))
    return scale


def cmd_verify(args):
    """Run the verification suites and print a residual summary."""
    tol_scale = tolerance_scale()
    results = run_suites(args.suite, args.seed, args.samples, tol_scale)
    passed = all(result.passed for result in results)
    if args.json:
        print(json.dumps(OrderedDict([
            ("schema_version", SCHEMA_VERSION),
            ("sampler", SAMPLER),
            ("seed", args.seed),
            ("samples", args.samples),
            ("tolerance_scale", tol_scale),
            ("passed", passed),
            ("suites", [result.as_dict() for result in results])]),
            indent=2))
    else:
        print("%-18s %-6s %12s %8s %8s"
              % ("suite", "status", "worst", "checks", "time/s"))
        for result in results:
            print("%-18s %-6s %12.3e %8d %8.2f"
                  % (result.name, "PASS" if result.passed else "FAIL",
                     result.worst, result.n_checks, result.elapsed))
            if args.verbose or not result.passed:
                for label, (residual, tolerance) in result.checks.items():
                    print("    %-40s %12.3e %10.1e"
                          % (label, residual, tolerance))
        print("sampler %s, seed %d: %s"
              % (SAMPLER, args.seed, "all suites passed" if passed
                 else "FAILED"))
    return 0 if passed else 1


def _params(args):
    return check_params(Params(args.a, args.b, args.omega, args.t0))


def _picture(value):
    try:
        return check_picture(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_params_arguments(parser):
    parser.add_argument("--picture", type=_picture, default="TO",
                        help="Picture, one of %s (default: TO)."
                        % ", ".join(pictures))
    parser.add_argument("--a", type=float, required=True,
                        help="Kinetic power a.")
    parser.add_argument("--b", type=float, required=True,
                        help="Potential power b.")
    parser.add_argument("--omega", type=float, required=True,
                        help="Frequency w > 0.")
    parser.add_argument("--t0", type=float, required=True,
                        help="Initial time t_o > 0.")


def build_parser():
    """Argument parser of the tdsolve command."""
    parser = argparse.ArgumentParser(
        prog="tdsolve",
        description="Closed-form solutions of the oscillator "
                    "H = 1/2 (t_o/t)^a P^2 + 1/2 w^2 (t/t_o)^b X^2.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true",
                        help="Log debug messages to stderr.")
    subparsers = parser.add_subparsers(dest="command")

    classify_parser = subparsers.add_parser(
        "classify", parents=[common],
        help="Print the regime of a parameter set.")
    _add_params_arguments(classify_parser)
    classify_parser.add_argument("--json", action="store_true",
                                 help="Print the report as JSON.")
    classify_parser.set_defaults(func=cmd_classify)

    trace_parser = subparsers.add_parser(
        "trace", parents=[common],
        help="Write expectation values and uncertainties as CSV.")
    _add_params_arguments(trace_parser)
    trace_parser.add_argument("--x0", type=float, default=0.0,
                              help="Initial position (default: 0).")
    trace_parser.add_argument("--p0", type=float, default=0.0,
                              help="Initial momentum (default: 0).")
    trace_parser.add_argument("--r", type=float, default=0.0,
                              help="Squeeze magnitude r >= 0 (default: 0).")
    trace_parser.add_argument("--theta", type=float, default=0.0,
                              help="Squeeze phase in radians (default: 0).")
    trace_parser.add_argument("--t-start", type=float, default=None,
                              dest="t_start",
                              help="First grid time (default: initial "
                                   "time, t_o or offset 0 for TO).")
    trace_parser.add_argument("--t-end", type=float, required=True,
                              dest="t_end", help="Last grid time.")
    trace_parser.add_argument("--points", type=int, default=200,
                              help="Number of grid points (default: 200).")
    trace_parser.add_argument("--output", default=None,
                              help="CSV file (default: stdout).")
    trace_parser.add_argument("--plot", default=None,
                              help="Save a figure of the trace to this "
                                   "file (requires matplotlib).")
    trace_parser.set_defaults(func=cmd_trace)

    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Run the verification suites.")
    verify_parser.add_argument("--seed", type=int, default=0,
                               help="Seed of the MT19937 sampler "
                                    "(default: 0).")
    verify_parser.add_argument("--samples", type=int, default=100,
                               help="Samples per regime (default: 100).")
    verify_parser.add_argument("--suite", action="append",
                               choices=list(SUITES.keys()), default=None,
                               help="Suite to run, may be repeated "
                                    "(default: all).")
    verify_parser.add_argument("--json", action="store_true",
                               help="Print the report as JSON.")
    verify_parser.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    """Entry point of the tdsolve command.

    Parameters
    ----------
    argv : list of str, optional (default: sys.argv[1:])
        Command-line arguments

    Returns
    -------
    exit_code : int
        0 on success, 1 on failed verification, 2 on invalid input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except ValueError as e:
        print("tdsolve: error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
