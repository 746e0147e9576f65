"""Command line entry point.

    e2zeros zeros --max-denominator 5 --format csv --out z.csv
    e2zeros zeros --min-height .002 --format json --out z.json
    e2zeros verify --all --out report.json
    e2zeros verify --theorem 2
    e2zeros plot --figure real_locus --out fig2.svg
    e2zeros axis-zeros

Exit status: 0 on success, 1 on usage or domain errors, 2 when a
verification check fails.
"""
import argparse
import json
import sys

from . import export, plots
from .errors import VerificationError
from .verify import DEFAULT_SEED, THEOREMS, run_checks
from .zerofinder import build_catalog, zero_on_half_line, zero_on_imaginary_axis

EXIT_OK, EXIT_ERROR, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _positive_float(s):
    v = float(s)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return v


def build_parser():
    p = _Parser(prog="e2zeros", description="Zeros of the weight two Eisenstein series.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def selectors(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--max-denominator", type=_positive_int)
        g.add_argument("--min-height", type=_positive_float)

    z = sub.add_parser("zeros", help="refine and export a catalog of zeros")
    selectors(z)
    z.add_argument("--format", choices=("csv", "json"), default="csv")
    z.add_argument("--out", help="output path (stdout if omitted)")

    v = sub.add_parser("verify", help="run the numerical checks")
    v.add_argument("--theorem", choices=THEOREMS, default="all")
    v.add_argument("--all", action="store_true", help="same as --theorem all")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--max-denominator", type=_positive_int, default=50)
    v.add_argument("--out", help="write a JSON report here")

    pl = sub.add_parser("plot", help="render a figure as SVG")
    pl.add_argument("--figure", choices=plots.FIGURES, required=True)
    pl.add_argument("--out", required=True)
    selectors(pl)

    a = sub.add_parser("axis-zeros", help="zeros on Re z = 0 and Re z = -1/2 by bisection")
    a.add_argument("--format", choices=("text", "json"), default="text")
    return p


def _cmd_zeros(args):
    if args.max_denominator is None and args.min_height is None:
        raise UsageError("zeros: give --max-denominator or --min-height")
    catalog = build_catalog(args.max_denominator, args.min_height)
    out = args.out or sys.stdout
    if args.format == "csv":
        export.export_csv(catalog, out)
    else:
        export.export_json(catalog, out)
    return EXIT_OK


def _cmd_verify(args):
    theorem = "all" if args.all else args.theorem
    report = run_checks(theorem, seed=args.seed, max_den=args.max_denominator)
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name:28s} {c.measured:.6g} {c.relation} {c.threshold:.6g}")
    if args.out:
        export.export_json(report, args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_plot(args):
    spec = plots.default_spec(args.figure)
    if args.figure == "real_locus":
        plots.plot_real_locus_svg(spec, args.out)
    elif args.figure == "h_image":
        plots.plot_h_image_svg(spec, args.out)
    else:
        if args.max_denominator is None and args.min_height is None:
            if args.figure == "zeros_scatter":
                args.min_height = spec.y_range[0]
            else:
                args.max_denominator = 6
        catalog = build_catalog(args.max_denominator, args.min_height)
        if args.figure == "zeros_scatter":
            plots.plot_zeros_svg(catalog, spec, args.out)
        else:
            plots.plot_circles_svg(catalog, spec, args.out)
    return EXIT_OK


def _cmd_axis_zeros(args):
    y_axis, y_half = zero_on_imaginary_axis(), zero_on_half_line()
    if args.format == "json":
        print(json.dumps({"imaginary_axis": export.fmt(y_axis), "half_line": export.fmt(y_half)}))
    else:
        print(f"imaginary_axis {export.fmt(y_axis)}")
        print(f"half_line {export.fmt(y_half)}")
    return EXIT_OK


COMMANDS = {
    "zeros": _cmd_zeros,
    "verify": _cmd_verify,
    "plot": _cmd_plot,
    "axis-zeros": _cmd_axis_zeros,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
