"""Command-line interface.

Exit codes: 0 success, 1 not found or verification failed, 2 input lies on
a curve of the requested degree, 3 I/O or format error, 4 budget exceeded,
5 internal anomaly (a guaranteed search failed; a report file is written).
"""

import argparse
import json
import logging
import sys
import traceback

from ordcurves import __version__
from ordcurves.errors import (
    AllCollinear,
    Anomaly,
    BudgetExceeded,
    ContainedInCurve,
    CounterexampleFound,
    FormatError,
    OrdCurvesError,
    ParseError,
    SelectionFailed,
    SpecInvalid,
    ZeroVector,
)
from ordcurves.fileio import format_points, read_certificate, read_points, write_certificate
from ordcurves.finder import find_ordinary, verify_certificate
from ordcurves.generators import KINDS, GeneratorSpec, generate
from ordcurves.oracle import DEFAULT_BUDGET, brute_force_ordinary
from ordcurves.paramspace import containing_curve, expected_dim_defect, param_dim
from ordcurves.plot import emit_plot

EXIT_OK, EXIT_NOT_FOUND, EXIT_PRECONDITION, EXIT_IO, EXIT_BUDGET, EXIT_ANOMALY = range(6)

REPORT_FILE = "ordcurves-anomaly.json"


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _anomaly(exc, args, A=None):
    report = {
        "command": args.command,
        "error": f"{type(exc).__name__}: {exc}",
        "traceback": traceback.format_exc(),
        "points": [list(p) for p in A] if A is not None else None,
    }
    with open(REPORT_FILE, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
    print(f"internal anomaly: {exc}; report written to {REPORT_FILE}", file=sys.stderr)
    return EXIT_ANOMALY


def _precondition(A, d):
    f = containing_curve(A, d)
    if f is None:
        return None
    print(f"input is contained in a curve of degree {d}: {f}", file=sys.stderr)
    return EXIT_PRECONDITION


def cmd_find(args):
    A = read_points(args.input)
    code = _precondition(A, args.degree)
    if code is not None:
        return code
    try:
        cert = find_ordinary(A, args.degree, allow_oracle_fallback=not args.no_fallback, threads=args.threads)
    except SelectionFailed as exc:
        if exc.anomalous:
            return _anomaly(exc, args, A)
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except CounterexampleFound as exc:
        print(f"COUNTEREXAMPLE: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except Anomaly as exc:
        return _anomaly(exc, args, A)
    _emit(write_certificate(cert), args.output)
    return EXIT_OK


def cmd_oracle(args):
    A = read_points(args.input)
    code = _precondition(A, args.degree)
    if code is not None:
        return code
    found = brute_force_ordinary(
        A, args.degree, mode="all" if args.all else "first", budget=args.budget, threads=args.threads
    )
    if not found:
        print(f"COUNTEREXAMPLE: no ordinary curve of degree {args.degree} among {len(A)} points", file=sys.stderr)
        return EXIT_NOT_FOUND
    for T, f in found:
        print(" ".join(map(str, T)) + " : " + " ".join(map(str, f.coeffs)))
    return EXIT_OK


def cmd_verify(args):
    A = read_points(args.input)
    with open(args.cert, encoding="utf-8") as fh:
        cert = read_certificate(fh.read())
    verdict = verify_certificate(A, cert)
    print("verified" if verdict else f"FAILED: {verdict.reason}")
    return EXIT_OK if verdict else EXIT_NOT_FOUND


def cmd_gen(args):
    spec = GeneratorSpec(
        kind=args.kind,
        n=args.n,
        seed=args.seed,
        bound=args.bound,
        on_line=args.on_line,
        on_conic=args.on_conic,
        on_cubic=args.on_cubic,
        off_collinear=args.off_collinear,
    )
    _emit(format_points(generate(spec)), args.output)
    return EXIT_OK


def cmd_dims(args):
    A = read_points(args.input)
    d = args.degree
    print(f"param_dim {param_dim(A, d)}")
    if len(A) <= 2 * d + 2:
        defect, why = expected_dim_defect(A, d)
        print(f"defect {defect}")
        print(f"explanation {why.value if why else '-'}")
    return EXIT_OK


def _window(text):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("window must be X0,Y0,X1,Y1") from None
    if len(vals) != 4 or vals[0] >= vals[2] or vals[1] >= vals[3]:
        raise argparse.ArgumentTypeError("window must be X0,Y0,X1,Y1 with X0<X1 and Y0<Y1")
    return tuple(vals)


def cmd_plot(args):
    A = read_points(args.input)
    cert = None
    if args.cert:
        with open(args.cert, encoding="utf-8") as fh:
            cert = read_certificate(fh.read())
    _emit(emit_plot(A, cert, args.window), args.svg)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="ordcurves", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("find", help="find an ordinary line, conic or cubic")
    f.add_argument("--degree", type=int, choices=(1, 2, 3), required=True)
    f.add_argument("--input", required=True)
    f.add_argument("--output")
    f.add_argument("--no-fallback", action="store_true", help="never fall back to exhaustive search")
    f.add_argument("--threads", type=int, default=1)
    f.set_defaults(func=cmd_find)

    o = sub.add_parser("oracle", help="exhaustive search over subsets")
    o.add_argument("--degree", type=int, choices=(2, 3, 4), required=True)
    o.add_argument("--input", required=True)
    o.add_argument("--all", action="store_true", help="list every subset instead of the first")
    o.add_argument("--budget", type=int, default=None, help=f"max subsets (default {DEFAULT_BUDGET})")
    o.add_argument("--threads", type=int, default=1)
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help="check a certificate against a point file")
    v.add_argument("--input", required=True)
    v.add_argument("--cert", required=True)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="generate a point set")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--bound", type=int, required=True)
    g.add_argument("--on-line", type=int)
    g.add_argument("--on-conic", type=int)
    g.add_argument("--on-cubic", type=int)
    g.add_argument("--off-collinear", type=int, default=3)
    g.add_argument("--output")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dims", help="dimension of the curves through the points")
    d.add_argument("--degree", type=int, required=True)
    d.add_argument("--input", required=True)
    d.set_defaults(func=cmd_dims)

    pl = sub.add_parser("plot", help="write an SVG figure")
    pl.add_argument("--input", required=True)
    pl.add_argument("--cert")
    pl.add_argument("--svg", required=True)
    pl.add_argument("--window", type=_window, required=True)
    pl.set_defaults(func=cmd_plot)
    return p


def _glue_window(argv):
    # "--window -1,-1,1,1" would otherwise be read as an option
    out = []
    for a in argv:
        if out and out[-1] == "--window" and a.startswith("-"):
            out[-1] = f"--window={a}"
        else:
            out.append(a)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_window(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (OSError, ParseError, FormatError, ZeroVector) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AllCollinear as exc:
        print(f"input is contained in a line: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ContainedInCurve as exc:
        print(f"input is contained in a curve of degree {exc.degree}: {exc.curve}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SpecInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except Anomaly as exc:
        return _anomaly(exc, args)
    except OrdCurvesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
