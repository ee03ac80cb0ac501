"""Command-line front end: ``tropcalc <subcommand> ...``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors (the
error class name is printed on stderr).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import textio
from .core import NEG_INF, scalar
from .errors import TropicalError
from .plfn import (
    PLFunction,
    Prescription,
    classify,
    eval_pl,
    from_prescription,
    roots_and_poles,
    to_plfunction,
)
from .poly import TropPoly, compactify, eval_poly, factor, maximalize, roots
from .surface2d import TropBiPoly, amoeba_sample, eval2, tropical_curve, tropicalize


class UsageError(Exception):
    pass


def _read_expr(args) -> str:
    if args.infile:
        with open(args.infile, encoding="utf-8") as fh:
            return fh.read().strip()
    if args.expr is None:
        raise UsageError("an expression or --in FILE is required")
    return args.expr


def _lower(args):
    value = textio.parse_expr(_read_expr(args), extended=getattr(args, "extended", False))
    if getattr(args, "extended", False) and isinstance(value, TropBiPoly):
        raise UsageError("--extended applies to univariate inputs only")
    return value


def _univariate(value):
    if isinstance(value, TropPoly):
        return value
    raise UsageError("expected a univariate polynomial expression")


def _emit(args, data: bytes):
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _fmt(args, default):
    return args.format or default


def _roots_json(pairs):
    return [[r, m] for r, m in pairs]


def cmd_eval(args):
    value = _lower(args)
    if not args.at:
        raise UsageError("eval needs --at VALUE ...")
    points = [scalar(v) for v in args.at]
    if isinstance(value, TropBiPoly):
        if len(points) != 2:
            raise UsageError("bivariate eval needs --at X Y")
        result = eval2(value, *points)
    elif isinstance(value, TropPoly):
        result = [eval_poly(value, p) for p in points]
    elif isinstance(value, PLFunction):
        if any(p is NEG_INF for p in points):
            raise UsageError("rational functions are evaluated at finite points only")
        result = [eval_pl(value, p) for p in points]
    return textio.render(result, _fmt(args, "json"))


def cmd_canon(args):
    return textio.render(maximalize(_univariate(_lower(args))), _fmt(args, "text"))


def cmd_compact(args):
    return textio.render(compactify(_univariate(_lower(args))), _fmt(args, "text"))


def cmd_roots(args):
    value = _lower(args)
    if isinstance(value, PLFunction):
        rts, poles, (kind, mult) = roots_and_poles(value)
        obj = {"roots": _roots_json(rts), "poles": _roots_json(poles), "minus_infinity": [kind, mult]}
        return textio.render(obj, _fmt(args, "json"))
    return textio.render(_roots_json(roots(_univariate(value))), _fmt(args, "json"))


def cmd_factor(args):
    return textio.render(factor(_univariate(_lower(args))), _fmt(args, "json"))


def _prescription_entries(tokens):
    entries = []
    for tok in tokens or []:
        loc, sep, mult = tok.partition(":")
        if not sep:
            raise UsageError(f"expected LOC:MULT, got {tok!r}")
        try:
            entries.append((scalar(loc), Fraction(mult)))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad prescription token {tok!r}") from None
    return entries


def cmd_build(args):
    anchor = None
    if args.anchor:
        anchor = (Fraction(args.anchor[0]), Fraction(args.anchor[1]))
    K = Fraction(args.K) if args.K is not None else None
    p = Prescription(
        roots=tuple(_prescription_entries(args.roots)),
        poles=tuple(_prescription_entries(args.poles)),
        K=None if anchor else (K if K is not None else Fraction(0)),
        anchor=anchor,
        extended=args.extended,
    )
    return textio.render(from_prescription(p), _fmt(args, "text"))


def cmd_classify(args):
    value = _lower(args)
    if isinstance(value, TropPoly):
        value = to_plfunction(value)
    if not isinstance(value, PLFunction):
        raise UsageError("expected a univariate expression")
    rts, poles, (kind, mult) = roots_and_poles(value)
    obj = {
        "class": classify(value).value,
        "roots": _roots_json(rts),
        "poles": _roots_json(poles),
        "minus_infinity": [kind, mult],
    }
    return textio.render(obj, _fmt(args, "json"))


def _bivariate(args):
    value = _lower(args)
    if isinstance(value, TropPoly):
        value = TropBiPoly({(int(e), 0): c for e, c in value.items()})
    if not isinstance(value, TropBiPoly):
        raise UsageError("expected a polynomial in x and y")
    return value


def cmd_curve(args):
    return textio.render(tropical_curve(_bivariate(args)), _fmt(args, "json"))


def cmd_tropicalize(args):
    return textio.render(tropicalize(textio.parse_classical(_read_expr(args))), _fmt(args, "text"))


def cmd_amoeba(args):
    F = textio.numeric_coefficients(textio.parse_classical(_read_expr(args)))
    pts = amoeba_sample(F, args.t, args.samples, args.seed)
    fmt = _fmt(args, "csv")
    if fmt == "svg":
        overlay = tropical_curve(tropicalize(textio.parse_classical(_read_expr(args))))
        window = tuple(args.window) * 2 if args.window else None
        return textio.render(pts, "svg", window=window, overlay=overlay)
    return textio.render(pts, fmt)


def cmd_plot(args):
    value = _lower(args)
    fmt = _fmt(args, "svg")
    if isinstance(value, TropBiPoly):
        window = None
        if args.window:
            a, b = (Fraction(v) for v in args.window)
            window = (a, b, a, b)
        return textio.render(tropical_curve(value), fmt, window=window)
    if isinstance(value, TropPoly):
        value = to_plfunction(value)
    if not isinstance(value, PLFunction):
        raise UsageError("nothing to plot for a constant expression")
    window = tuple(Fraction(v) for v in args.window) if args.window else None
    if window and window[0] >= window[1]:
        raise UsageError("--window needs A < B")
    return textio.render(value, fmt, window=window)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcalc", description="Exact max-plus tropical calculus.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, expr=True, extended=True):
        p = sub.add_parser(name, help=help)
        if expr:
            p.add_argument("expr", nargs="?", help="expression (or use --in)")
            p.add_argument("--in", dest="infile", help="read the expression from a file")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=["json", "text", "csv", "svg"])
        if extended:
            p.add_argument("--extended", action="store_true", help="allow rational exponents/slopes")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate at one or more points")
    p.add_argument("--at", nargs="+", metavar="VALUE")
    add("canon", cmd_canon, "maximal representative")
    add("compact", cmd_compact, "compact form")
    add("roots", cmd_roots, "roots with multiplicities")
    add("factor", cmd_factor, "factor into linear terms")
    p = add("build", cmd_build, "function from prescribed roots and poles", expr=False)
    p.add_argument("--roots", nargs="*", metavar="LOC:MULT")
    p.add_argument("--poles", nargs="*", metavar="LOC:MULT")
    p.add_argument("--K", help="constant multiple (default 0)")
    p.add_argument("--anchor", nargs=2, metavar=("X", "VALUE"))
    add("classify", cmd_classify, "polynomial / rational / unrepresentable")
    add("curve", cmd_curve, "tropical plane curve", extended=False)
    add("tropicalize", cmd_tropicalize, "tropicalize a Puiseux polynomial", extended=False)
    p = add("amoeba", cmd_amoeba, "sample an amoeba", extended=False)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", nargs=2, type=float, metavar=("A", "B"))
    p = add("plot", cmd_plot, "SVG plot of a graph or curve")
    p.add_argument("--window", nargs=2, metavar=("A", "B"))
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "build" and args.K is not None and args.anchor:
            raise UsageError("give either --K or --anchor")
        data = args.func(args)
    except UsageError as exc:
        print(f"tropcalc {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except TropicalError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    _emit(args, data)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
