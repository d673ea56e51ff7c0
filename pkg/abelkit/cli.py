import argparse
import logging
import sys
from fractions import Fraction

import mpmath
import pandas as pd

from .data.catalog import catalog_frame, get_function
from .errors import AbelKitError, NumericFailure
from .models.abel import abel_inverse, abel_value, fractional_iterate, half_iterate
from .models.ej import julia_series
from .models.ml import FORMS, MLFormula, delta_estimate, ml_value
from .utils.formatting import PiMultiple, format_truncated, parse_number
from .utils.plot import plot_data, write_csv
from .utils.verify import all_passed, verify

logger = logging.getLogger("abelkit")

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2


class ArgumentParser(argparse.ArgumentParser):
    """``argparse`` with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def number(text):
    return parse_number(text)


def rational(text):
    value = parse_number(text)
    if isinstance(value, PiMultiple):
        raise ValueError(f"{text!r} is not rational")
    return value


def _function(args):
    return get_function(args.fn, p=getattr(args, "p", None), q=getattr(args, "q", None))


def _print_frame(frame: pd.DataFrame, csv: bool = False, out=None):
    if csv or out:
        write_csv(frame, out)
    else:
        print(frame.to_string(index=False))


## subcommands
def cmd_list(args):
    _print_frame(catalog_frame(), args.csv)
    return EXIT_OK


def _series_rows(label, series):
    return [(label, n, num, den, series.order) for n, num, den in series.to_rows()]


def cmd_expand(args):
    fn = _function(args)
    result = julia_series(fn, args.terms)
    abel = result.abel
    header = "g(x)" if fn.presentation_sign > 0 else "-g(x)"
    if args.csv:
        rows = _series_rows("lambda", result.julia) + _series_rows("g'", result.reciprocal)
        order = abel.taylor.order
        rows.append((header, -fn.tau, abel.pole.numerator, abel.pole.denominator, order))
        rows.append((header, "ln", abel.log.numerator, abel.log.denominator, order))
        rows += _series_rows(header, abel.taylor)
        frame = pd.DataFrame(rows, columns=["series", "exponent", "numerator", "denominator", "order"])
        write_csv(frame, args.out)
        return EXIT_OK
    print(f"lambda(x) = {result.julia.to_text()}")
    print(f"g'(x) = {result.reciprocal.to_text()}")
    print(f"{header} = {abel.to_text()}")
    return EXIT_OK


def cmd_eval(args):
    result = abel_value(_function(args), args.x, args.digits)
    print(format_truncated(result.value, args.digits))
    print(f"error_estimate={mpmath.nstr(result.error_estimate, 5)} n_used={result.n_used} K_used={result.K_used}")
    return EXIT_OK


def cmd_inverse(args):
    value = abel_inverse(_function(args), args.y, args.digits)
    print(format_truncated(value, args.digits))
    return EXIT_OK


def cmd_iterate(args):
    value = fractional_iterate(_function(args), args.t, args.x, args.digits)
    print(format_truncated(value, args.digits))
    return EXIT_OK


def cmd_half(args):
    value = half_iterate(args.name, args.x, args.digits)
    print(format_truncated(value, args.digits))
    return EXIT_OK


def cmd_delta(args):
    if args.q is not None and not args.experimental:
        raise ValueError("the x/(1+x^q) family needs --experimental")
    fn = _function(args)
    report = delta_estimate(fn, args.x, args.nmax, args.digits)
    _print_frame(report.to_frame(), args.csv)
    return EXIT_OK


def cmd_ml(args):
    fn = _function(args)
    logger.info(f"s_n = {MLFormula.from_function(fn).to_text(args.form)}")
    result = ml_value(fn, args.x, args.nmax, args.order, form=args.form)
    print(f"{mpmath.nstr(result.estimate, 20)} +/- {mpmath.nstr(result.error, 3)}")
    return EXIT_OK


def cmd_plot(args):
    frame = plot_data(args.name, args.min, args.max, args.samples, args.digits)
    write_csv(frame, args.out)
    return EXIT_OK


def cmd_verify(args):
    report = verify(args.digits)
    _print_frame(report, args.csv, args.out)
    return EXIT_OK if all_passed(report) else EXIT_NUMERIC


def get_args_parser(add_help=True):
    parser = ArgumentParser(prog="abelkit", description="Abel functions, Julia series and fractional iterates", add_help=add_help)
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    sub.required = True

    def function_args(p):
        p.add_argument("fn", type=str, help="catalog name, e.g. xexp-neg, lambert-w, pow-p")
        p.add_argument("--p", type=rational, default=None, help="exponent for pow-p, x/(1+x)^p")
        p.add_argument("--q", type=int, default=None, help="exponent for pow-q, x/(1+x^q)")

    p = sub.add_parser("list", help="list the catalog")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("expand", help="exact Julia and Abel series")
    function_args(p)
    p.add_argument("--terms", type=int, default=32, help="truncation parameter K; default 32")
    p.add_argument("--csv", action="store_true", help="rows of series, exponent, numerator, denominator, order")
    p.add_argument("--out", type=str, default=None, help="output path for --csv")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("eval", help="Abel function value")
    function_args(p)
    p.add_argument("--x", type=number, required=True, help="argument, e.g. 1/2, 0.25 or pi/2")
    p.add_argument("--digits", type=int, default=50, help="digits after the decimal point; default 50")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("inverse", help="inverse Abel function")
    function_args(p)
    p.add_argument("--y", type=number, required=True, help="Abel value")
    p.add_argument("--digits", type=int, default=50, help="digits after the decimal point; default 50")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("iterate", help="fractional iterate theta^[t](x)")
    function_args(p)
    p.add_argument("--t", type=rational, required=True, help="iteration order, e.g. 1/2")
    p.add_argument("--x", type=number, required=True, help="argument")
    p.add_argument("--digits", type=int, default=50, help="digits after the decimal point; default 50")
    p.set_defaults(func=cmd_iterate)

    p = sub.add_parser("half", help="half-iterate of xexp, xplusinv or a catalog function")
    p.add_argument("name", type=str, help="xexp, xplusinv or a catalog name")
    p.add_argument("--x", type=number, required=True, help="argument")
    p.add_argument("--digits", type=int, default=50, help="digits after the decimal point; default 50")
    p.set_defaults(func=cmd_half)

    p = sub.add_parser("delta", help="EJ versus principal normalization")
    function_args(p)
    p.add_argument("--x", type=number, default=Fraction(1), help="argument; default 1")
    p.add_argument("--nmax", type=int, default=None, help="longest orbit for the limit fit")
    p.add_argument("--digits", type=int, default=30, help="digits for the EJ value; default 30")
    p.add_argument("--experimental", action="store_true", help="allow the x/(1+x^q) family")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("ml", help="principal Abel value by limit extrapolation")
    function_args(p)
    p.add_argument("--x", type=number, required=True, help="argument")
    p.add_argument("--nmax", type=int, default=None, help="longest orbit for the limit fit")
    p.add_argument("--order", type=int, default=None, help="correction order of the fit")
    p.add_argument("--form", type=str, default="direct", choices=FORMS, help="limit sequence form")
    p.set_defaults(func=cmd_ml)

    p = sub.add_parser("plot", help="CSV samples x,theta,half_iterate")
    p.add_argument("name", type=str, help="xexp, xplusinv, f67 or a catalog name")
    p.add_argument("--min", type=rational, default=None, help="left end of the range")
    p.add_argument("--max", type=rational, default=None, help="right end of the range")
    p.add_argument("--samples", type=int, default=None, help="number of samples")
    p.add_argument("--digits", type=int, default=None, help="significant digits per value")
    p.add_argument("--out", type=str, default=None, help="output path; default stdout")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("verify", help="check every published series and constant")
    p.add_argument("--digits", type=int, default=50, help="digits to match, at most 60; default 50")
    p.add_argument("--csv", action="store_true", help="CSV output")
    p.add_argument("--out", type=str, default=None, help="output path")
    p.set_defaults(func=cmd_verify)

    return parser


def main(args):
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except NumericFailure as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_NUMERIC
    except (AbelKitError, ValueError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


def run(argv=None):
    try:
        args = get_args_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return main(args)


def cli():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    cli()
