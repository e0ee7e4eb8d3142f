"""Command-line interface.

Subcommands: spectrum | evolve | certify | scan | compare-classical | table.
Exit codes: 0 success, 2 invalid parameters, 3 output I/O failure.  CSV and
JSON outputs are byte-deterministic for a given configuration; numbers are
written in full binary64 round-trip precision.
"""

import argparse
import json
import math
import re
import sys

import numpy as np

from .classical import ct_limit, transition_matrix, two_state_ct
from .exceptions import ContractViolationError, InvalidParameterError, ToleranceError
from .graphs import (
    balanced_multipartite,
    cayley_symmetric,
    complete_graph,
    cycle_graph,
    hypercube_graph,
)
from .mixing import (
    DEFAULT_CERT_EPS,
    DEFAULT_SCAN_EPS,
    VERDICT_MIXES,
    certify_complete,
    certify_multipartite,
    numeric_cross_check,
    scan_mixing,
)
from .walk import ContinuousTimeQuantumWalk

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

_PI_TIME = re.compile(r"(\d+)?pi(?:/(\d+))?")


def parse_time(text):
    """Parse a time given as a real number or a rational multiple of pi.

    Accepts forms like ``0.5``, ``1e-3``, ``pi``, ``2pi``, ``3pi/4``.
    """
    s = str(text).strip().lower()
    match = _PI_TIME.fullmatch(s)
    if match:
        num = int(match.group(1)) if match.group(1) else 1
        den = int(match.group(2)) if match.group(2) else 1
        if den == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
        return num * math.pi / den
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse time {text!r}; use a real number or 'Api/B'"
        ) from None


def _fmt(x):
    # shortest representation that round-trips binary64
    return repr(float(x))


def _fmt_pretty(x):
    return f"{float(x):.12g}"


def _add_graph_flags(sub, families=("complete", "multipartite", "cycle", "cayley-sym", "hypercube")):
    grp = sub.add_mutually_exclusive_group(required=True)
    if "complete" in families:
        grp.add_argument("--complete", type=int, metavar="N", help="complete graph K_N")
    if "multipartite" in families:
        grp.add_argument(
            "--multipartite", type=int, nargs=2, metavar=("A", "B"),
            help="balanced complete multipartite graph, A blocks of B vertices",
        )
    if "cycle" in families:
        grp.add_argument("--cycle", type=int, metavar="N", help="cycle C_N")
    if "cayley-sym" in families:
        grp.add_argument(
            "--cayley-sym", type=int, metavar="N", dest="cayley_sym",
            help="Cayley graph of S_N with all transpositions",
        )
    if "hypercube" in families:
        grp.add_argument("--hypercube", type=int, metavar="D", help="D-dimensional hypercube")


def _graph_from_args(args):
    if getattr(args, "complete", None) is not None:
        return complete_graph(args.complete)
    if getattr(args, "multipartite", None) is not None:
        return balanced_multipartite(*args.multipartite)
    if getattr(args, "cycle", None) is not None:
        return cycle_graph(args.cycle)
    if getattr(args, "cayley_sym", None) is not None:
        return cayley_symmetric(args.cayley_sym)
    if getattr(args, "hypercube", None) is not None:
        return hypercube_graph(args.hypercube)
    raise InvalidParameterError("no graph specified")


def _group_spectrum(eigenvalues, tol=1e-9):
    # consecutive grouping of the descending spectrum
    groups = []
    for value in sorted(eigenvalues, reverse=True):
        if groups and abs(groups[-1][0] - value) <= tol:
            groups[-1][1] += 1
        else:
            groups.append([float(value), 1])
    return groups


def cmd_spectrum(args):
    g = _graph_from_args(args)
    walk = ContinuousTimeQuantumWalk().fit(g)
    groups = _group_spectrum(walk.decomposition_.eigenvalues)
    if args.format == "json":
        doc = {
            "graph": {"family": g.family, "params": list(g.params)},
            "n": g.n,
            "degree": g.degree,
            "route": walk.route_,
            "spectrum": [{"eigenvalue": v, "multiplicity": m} for v, m in groups],
        }
        return json.dumps(doc, indent=2) + "\n"
    if args.format == "csv":
        lines = ["eigenvalue,multiplicity"]
        lines += [f"{_fmt(v)},{m}" for v, m in groups]
        return "\n".join(lines) + "\n"
    lines = [
        f"graph: {g.display_name} ({g.label})  n={g.n}  d={g.degree}  route={walk.route_}",
        "eigenvalues of H = A/d:",
    ]
    lines += [f"  {_fmt_pretty(v)} (x{m})" for v, m in groups]
    return "\n".join(lines) + "\n"


def _time_grid(args):
    if args.time is not None:
        return np.array([args.time])
    if args.window is None:
        raise InvalidParameterError("provide --time T, or --window T with optional --step D")
    window = float(args.window)
    if window <= 0:
        raise InvalidParameterError(f"window must be positive, got {window}")
    step = float(args.step) if args.step is not None else 1e-3 * window / (2.0 * math.pi)
    if not 0 < step <= window:
        raise InvalidParameterError(f"step must lie in (0, window], got {step}")
    ts = step * np.arange(int(math.floor(window / step)) + 1)
    if window - ts[-1] > 1e-9 * step:
        ts = np.append(ts, window)
    return ts


def cmd_evolve(args):
    if args.format != "csv":
        raise InvalidParameterError("evolve emits CSV time series; use --format csv")
    g = _graph_from_args(args)
    ts = _time_grid(args)
    walk = ContinuousTimeQuantumWalk(start_vertex=args.start).fit(g)
    probs = walk.transform(ts)
    tv = 0.5 * np.abs(probs - 1.0 / g.n).sum(axis=1)
    header = "t," + ",".join(f"P_{j}" for j in range(g.n)) + ",tv"
    lines = [header]
    for i, t in enumerate(ts):
        row = [_fmt(t)] + [_fmt(p) for p in probs[i]] + [_fmt(tv[i])]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _certify_report(args):
    if getattr(args, "complete", None) is not None:
        return certify_complete(args.complete, tolerance=args.eps)
    if getattr(args, "multipartite", None) is not None:
        return certify_multipartite(*args.multipartite, tolerance=args.eps)
    raise InvalidParameterError(
        "closed-form certification covers --complete and --multipartite only; "
        "use 'ctqw scan' for other families"
    )


def cmd_certify(args):
    report = _certify_report(args)
    crosscheck = numeric_cross_check(report)
    if args.format == "json":
        doc = {"report": report.to_dict(), "numeric_cross_check": crosscheck}
        return json.dumps(doc, indent=2) + "\n"
    lines = [
        f"graph: {report.graph_family}({','.join(str(p) for p in report.graph_params)})",
        f"verdict: {report.verdict}  [route: {report.route}]",
    ]
    if report.verdict == VERDICT_MIXES:
        times = ", ".join(_fmt_pretty(t) for t in report.witness_times)
        lines.append(f"uniform at t = {times} (mod period {_fmt_pretty(report.scan_window[1])})")
    else:
        lines.append(f"per-vertex deficit from uniform: {_fmt_pretty(report.min_distance)}")
    lines.append(f"numeric cross-check: {'pass' if crosscheck else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_scan(args):
    g = _graph_from_args(args)
    window = float(args.window) if args.window is not None else 100.0 * g.n
    report = scan_mixing(g, window, step=args.step, eps=args.eps)
    if args.format == "table":
        lines = [
            f"graph: {g.display_name} ({g.label})  n={g.n}",
            f"scan window: [0, {_fmt_pretty(window)}]  step: {_fmt_pretty(report.grid_step)}  eps: {_fmt_pretty(report.tolerance)}",
            f"verdict: {report.verdict}",
            f"min TV distance: {_fmt_pretty(report.min_distance)} at t = "
            + ", ".join(_fmt_pretty(t) for t in report.witness_times),
        ]
        return "\n".join(lines) + "\n"
    return report.to_json() + "\n"


def cmd_compare_classical(args):
    g = _graph_from_args(args)
    rates_given = args.alpha is not None or args.beta is not None
    if g.n != 2 and rates_given:
        raise InvalidParameterError(
            "the continuous-time classical chain is the two-state worked example; "
            "--alpha/--beta require a 2-vertex graph"
        )
    alpha = args.alpha if args.alpha is not None else 1.0
    beta = args.beta if args.beta is not None else 1.0
    t = args.time if args.time is not None else math.pi / 4.0
    steps = args.steps

    e0 = np.zeros(g.n)
    e0[0] = 1.0
    simple = np.linalg.matrix_power(transition_matrix(g, lazy=False), steps) @ e0
    lazy = np.linalg.matrix_power(transition_matrix(g, lazy=True), steps) @ e0
    quantum = ContinuousTimeQuantumWalk().fit(g).probabilities(t)

    rows = [
        (f"simple-discrete (k={steps})", simple),
        (f"lazy-discrete (k={steps})", lazy),
    ]
    if g.n == 2:
        chain = two_state_ct(alpha, beta, t) @ e0
        rows.append((f"continuous-classical (a={_fmt_pretty(alpha)}, b={_fmt_pretty(beta)}, t={_fmt_pretty(t)})", chain))
        rows.append((f"  limit t->inf", ct_limit(alpha, beta)))
    rows.append((f"quantum (t={_fmt_pretty(t)})", quantum))

    width = max(len(name) for name, _ in rows)
    header = f"{g.display_name}: classical vs quantum from a point mass at vertex 0"
    lines = [header, " " * width + "  " + "  ".join(f"P_{j}" for j in range(g.n))]
    for name, dist in rows:
        vals = "  ".join(_fmt_pretty(p) for p in dist)
        lines.append(f"{name.ljust(width)}  {vals}")
    return "\n".join(lines) + "\n"


def cmd_table(args):
    reports = [certify_complete(n) for n in range(2, 11)]
    for a in range(2, 7):
        for b in range(2, 13):
            if a * b <= 12:
                reports.append(certify_multipartite(a, b))
    rows = []
    for rep in reports:
        if rep.graph_family == "complete":
            name = f"K_{rep.graph_params[0]}"
            n = rep.graph_params[0]
        else:
            a, b = rep.graph_params
            name = "K_{" + ",".join([str(b)] * a) + "}"
            n = a * b
        if rep.verdict == VERDICT_MIXES:
            note = "t = " + ", ".join(_fmt_pretty(t) for t in rep.witness_times)
        else:
            note = f"deficit {_fmt_pretty(rep.min_distance)}"
        rows.append((name, str(n), rep.verdict, note))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    lines = ["uniform mixing over complete and balanced multipartite families:"]
    for name, n, verdict, note in rows:
        lines.append(f"  {name.ljust(widths[0])}  n={n.rjust(widths[1])}  {verdict.ljust(widths[2])}  {note}")
    return "\n".join(lines) + "\n"


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ctqw",
        description="Continuous-time quantum walks: spectra, evolution, and uniform-mixing verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues of H = A/d with multiplicities")
    _add_graph_flags(p)
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("evolve", help="probability time series as CSV")
    _add_graph_flags(p)
    p.add_argument("--time", type=parse_time, metavar="T", help="single evaluation time")
    p.add_argument("--window", type=parse_time, metavar="T", help="grid horizon [0, T]")
    p.add_argument("--step", type=parse_time, metavar="D", help="grid step (default T/(2000*pi))")
    p.add_argument("--start", type=int, default=0, metavar="V", help="start vertex (default 0)")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_evolve)

    p = sub.add_parser("certify", help="closed-form mixing certificate (complete/multipartite)")
    _add_graph_flags(p)
    p.add_argument("--eps", type=float, default=DEFAULT_CERT_EPS, metavar="E")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_certify)

    p = sub.add_parser("scan", help="numeric mixing scan over a time window")
    _add_graph_flags(p)
    p.add_argument("--window", type=parse_time, metavar="T", help="scan horizon (default 100 n)")
    p.add_argument("--step", type=parse_time, metavar="D", help="grid step (default T/(2000*pi))")
    p.add_argument("--eps", type=float, default=DEFAULT_SCAN_EPS, metavar="E")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser(
        "compare-classical",
        help="discrete / continuous classical walks next to the quantum walk",
    )
    _add_graph_flags(p)
    p.add_argument("--time", type=parse_time, metavar="T", help="evaluation time (default pi/4)")
    p.add_argument("--steps", type=int, default=1, metavar="K", help="discrete steps (default 1)")
    p.add_argument("--alpha", type=float, metavar="A", help="rate out of state 0 (K_2 chain only)")
    p.add_argument("--beta", type=float, metavar="B", help="rate out of state 1 (K_2 chain only)")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_compare_classical)

    p = sub.add_parser("table", help="headline verdict table: K_n (n<=10) and K_{axb} (ab<=12)")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(handler=cmd_table)

    return parser


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        text = args.handler(args)
    except (InvalidParameterError, ContractViolationError, ToleranceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(text, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
