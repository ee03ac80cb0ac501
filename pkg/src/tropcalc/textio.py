"""Expression syntax, pretty-printing and serialization.

Grammar (whitespace is insignificant)::

    expr   := term ('#' term)*            # tropical sum (max)
    term   := power (('*' | '/') power)*  # tropical product (+) / quotient (-)
    power  := atom ('^' exp)*
    exp    := ['-'] NUMBER | '(' ['-'] NUMBER ')'
    atom   := ['-'] NUMBER | 'ninf' | 'x' | 'y' | '(' expr ')'

``#`` is tropical addition.  ``*`` and ``/`` bind tighter and associate left.
``NUMBER`` is a decimal (``2``, ``-1.25``) or a rational written without
spaces (``3/2``); ``3 / 2`` with spaces is a tropical quotient.
"""

from __future__ import annotations

import io
import json
import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Union

from . import errors
from .core import NEG_INF, format_scalar, trop_add, trop_div, trop_mul, trop_pow
from .errors import (
    BivariateDivisionUnsupported,
    DivisionByTropicalZero,
    MixedVariablesInDivision,
    NegativeExponent,
    NonIntegerExponent,
    NonRationalLiteral,
    UnsupportedFormat,
    ZeroPolynomial,
)
from .plfn import (
    FunctionClass,
    PLFunction,
    as_rational,
    classify,
    constant_pl,
    eval_pl,
    tadd,
    tdiv,
    tmul,
)
from .poly import Factorization, TropPoly
from .surface2d import Edge, PuiseuxBiPoly, PuiseuxScalar, TropBiPoly, TropCurve

# --------------------------------------------------------------------------- AST


@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int = 0


@dataclass(frozen=True)
class NegInfLit:
    offset: int = 0


@dataclass(frozen=True)
class Var:
    name: str
    offset: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # '#', '*', '/'
    left: "Expr"
    right: "Expr"
    offset: int = 0


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction
    offset: int = 0


Expr = Union[Num, NegInfLit, Var, BinOp, Pow]

# ------------------------------------------------------------------------- lexer

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[#*/^()\-])
    """,
    re.VERBOSE,
)

_NON_RATIONAL_NAMES = {"inf", "infinity", "nan", "pi", "e"}


@dataclass(frozen=True)
class Token:
    kind: str  # 'num', 'ninf', 'var', 'op', 'end'
    value: object
    offset: int


def _literal(text: str, offset: int) -> Fraction:
    if "/" in text:
        p, q = text.split("/")
        if "." in p or "e" in p.lower():
            raise errors.SyntaxError(f"rational literal {text!r} needs an integer numerator", offset)
        if int(q) == 0:
            raise NonRationalLiteral(f"zero denominator in {text!r} at offset {offset}")
        return Fraction(int(p), int(q))
    try:
        return Fraction(Decimal(text))
    except InvalidOperation:
        raise NonRationalLiteral(f"{text!r} at offset {offset}") from None


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise errors.SyntaxError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        kind = m.lastgroup
        raw = m.group()
        off = _byte_offset(text, pos)
        if kind == "num":
            out.append(Token("num", _literal(raw, off), off))
        elif kind == "name":
            low = raw.lower()
            if raw == "ninf":
                out.append(Token("ninf", None, off))
            elif raw in ("x", "y"):
                out.append(Token("var", raw, off))
            elif low in _NON_RATIONAL_NAMES:
                raise NonRationalLiteral(f"{raw!r} is not a rational literal (offset {off})")
            else:
                raise errors.SyntaxError(f"unknown name {raw!r}", off)
        elif kind == "op":
            out.append(Token("op", raw, off))
        pos = m.end()
    out.append(Token("end", None, _byte_offset(text, len(text))))
    return out


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


# ------------------------------------------------------------------------ parser


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok.kind != "op" or tok.value != value:
            raise errors.SyntaxError(f"expected {value!r}", tok.offset)
        return tok

    def at_op(self, *values) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value in values

    def expr(self) -> Expr:
        left = self.term()
        while self.at_op("#"):
            op = self.take()
            left = BinOp("#", left, self.term(), op.offset)
        return left

    def term(self) -> Expr:
        left = self.power()
        while self.at_op("*", "/"):
            op = self.take()
            left = BinOp(op.value, left, self.power(), op.offset)
        return left

    def power(self) -> Expr:
        base = self.atom()
        while self.at_op("^"):
            op = self.take()
            base = Pow(base, self.exponent(), op.offset)
        return base

    def exponent(self) -> Fraction:
        paren = self.at_op("(")
        if paren:
            self.take()
        start = self.peek().offset
        negative = self.at_op("-")
        if negative:
            self.take()
        tok = self.take()
        if tok.kind != "num":
            raise errors.SyntaxError("exponent must be a number literal", tok.offset)
        if paren:
            self.expect(")")
        if negative and tok.value != 0:
            raise NegativeExponent(f"negative exponent -{tok.value} at offset {start}")
        return tok.value

    def atom(self) -> Expr:
        tok = self.take()
        if tok.kind == "num":
            return Num(tok.value, tok.offset)
        if tok.kind == "ninf":
            return NegInfLit(tok.offset)
        if tok.kind == "var":
            return Var(tok.value, tok.offset)
        if tok.kind == "op" and tok.value == "-":
            nxt = self.take()
            if nxt.kind != "num":
                raise errors.SyntaxError("'-' may only prefix a number literal", tok.offset)
            return Num(-nxt.value, tok.offset)
        if tok.kind == "op" and tok.value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "end":
            raise errors.SyntaxError("unexpected end of input", tok.offset)
        raise errors.SyntaxError(f"unexpected {tok.value!r}", tok.offset)


def parse(text: str) -> Expr:
    """Parse an expression; errors carry the byte offset of the problem."""
    parser = _Parser(tokenize(text))
    ast = parser.expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise errors.SyntaxError(f"unexpected {tok.value!r}", tok.offset)
    return ast


# ------------------------------------------------------------------------- lower


def variables(ast: Expr) -> set[str]:
    if isinstance(ast, Var):
        return {ast.name}
    if isinstance(ast, BinOp):
        return variables(ast.left) | variables(ast.right)
    if isinstance(ast, Pow):
        return variables(ast.base)
    return set()


def _divisions(ast: Expr):
    if isinstance(ast, BinOp):
        if ast.op == "/":
            yield ast
        yield from _divisions(ast.left)
        yield from _divisions(ast.right)
    elif isinstance(ast, Pow):
        yield from _divisions(ast.base)


def lower(ast: Expr, extended: bool = False):
    """Turn an AST into a :class:`TropPoly`, :class:`TropBiPoly` or :class:`PLFunction`.

    Variable-free expressions become constant polynomials.
    """
    names = variables(ast)
    divisions = list(_divisions(ast))
    if divisions:
        if "y" in names:
            for d in divisions:
                lv, rv = variables(d.left), variables(d.right)
                if lv and rv and lv != rv:
                    raise MixedVariablesInDivision(f"division mixes {sorted(lv)} and {sorted(rv)}")
            raise BivariateDivisionUnsupported("division is only supported for univariate expressions")
        value = _lower_pl(ast, extended)
        if value is NEG_INF:
            raise ZeroPolynomial("expression is identically -inf")
        if not isinstance(value, PLFunction):
            return TropPoly({0: value}, extended=extended)
        return value
    terms = _lower_terms(ast, extended)
    if not terms:
        raise ZeroPolynomial("expression is identically -inf")
    if "y" in names:
        return TropBiPoly(terms)
    return TropPoly({i: c for (i, _), c in terms.items()}, extended=extended)


def _check_power(k: Fraction, extended: bool, bivariate: bool):
    if k.denominator != 1 and (bivariate or not extended):
        raise NonIntegerExponent(f"exponent {k} requires the extended variant (univariate only)")


def _lower_terms(ast: Expr, extended: bool) -> dict:
    """Polynomial lowering into ``{(i, j): coef}``; an empty dict is -inf."""
    if isinstance(ast, Num):
        return {(0, 0): ast.value}
    if isinstance(ast, NegInfLit):
        return {}
    if isinstance(ast, Var):
        return {(1, 0) if ast.name == "x" else (0, 1): Fraction(0)}
    if isinstance(ast, BinOp):
        a = _lower_terms(ast.left, extended)
        b = _lower_terms(ast.right, extended)
        if ast.op == "#":
            out = dict(a)
            for k, c in b.items():
                out[k] = trop_add(out.get(k, NEG_INF), c)
            return out
        return _terms_mul(a, b)
    if isinstance(ast, Pow):
        base = _lower_terms(ast.base, extended)
        k = ast.exponent
        _check_power(k, extended, "y" in variables(ast.base))
        if k == 0:
            return {(0, 0): Fraction(0)}
        if k.denominator != 1:
            return {(k * i, 0): k * c for (i, _), c in base.items()}
        out = {(0, 0): Fraction(0)}
        for _ in range(int(k)):
            out = _terms_mul(out, base)
        return out
    raise TypeError(f"unknown node {ast!r}")


def _terms_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            c = c1 + c2
            if key not in out or out[key] < c:
                out[key] = c
    return out


_IDENTITY_X = PLFunction(Fraction(1), (Fraction(0), Fraction(0)), ())


def _scale_pl(f: PLFunction, k: Fraction, extended: bool) -> PLFunction:
    x0, v0 = f.anchor
    return PLFunction(k * f.left_slope, (x0, k * v0), tuple((x, k * w) for x, w in f.breaks), extended)


def _lower_pl(ast: Expr, extended: bool):
    """Lowering for expressions with division: values are scalars or PLFunctions."""
    if isinstance(ast, Num):
        return ast.value
    if isinstance(ast, NegInfLit):
        return NEG_INF
    if isinstance(ast, Var):
        return PLFunction(Fraction(1), (Fraction(0), Fraction(0)), (), extended)
    if isinstance(ast, Pow):
        base = _lower_pl(ast.base, extended)
        k = ast.exponent
        _check_power(k, extended, False)
        if isinstance(base, PLFunction):
            return _scale_pl(base, k, extended) if k else constant_pl(0, extended)
        return trop_pow(base, k)
    a = _lower_pl(ast.left, extended)
    b = _lower_pl(ast.right, extended)
    if ast.op == "/" and b is NEG_INF:
        raise DivisionByTropicalZero(f"division by ninf at offset {ast.offset}")
    if not isinstance(a, PLFunction) and not isinstance(b, PLFunction):
        return {"#": trop_add, "*": trop_mul, "/": trop_div}[ast.op](a, b)
    if ast.op == "#":
        if a is NEG_INF:
            return b
        if b is NEG_INF:
            return a
    elif a is NEG_INF or b is NEG_INF:
        return NEG_INF
    a = a if isinstance(a, PLFunction) else constant_pl(a, extended)
    b = b if isinstance(b, PLFunction) else constant_pl(b, extended)
    return {"#": tadd, "*": tmul, "/": tdiv}[ast.op](a, b)


def parse_expr(text: str, extended: bool = False):
    return lower(parse(text), extended=extended)


# ------------------------------------------------------------ classical polynomials

_CLASSICAL_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^(?:(?P<var>[txy])(?:\^\(?(?P<exp>\d+(?:/\d+)?)\)?)?|(?P<num>\d+(?:\.\d*)?(?:/\d+)?|\.\d+))$")


def parse_classical(text: str) -> PuiseuxBiPoly:
    """Parse a classical polynomial such as ``t*x + y + t^2`` (coefficients in ``t``).

    Terms are products of numbers and powers of ``t``, ``x``, ``y`` joined by
    ``+``/``-``.  Powers of ``t`` may be rational (``t^1/2``).
    """
    src = text.strip()
    if not src:
        raise errors.SyntaxError("empty polynomial", 0)
    terms: dict[tuple[int, int], PuiseuxScalar] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _CLASSICAL_TERM.match(src, pos)
        if not m or (m.group(1) is None and not first):
            raise errors.SyntaxError("expected '+' or '-'", _byte_offset(src, pos))
        sign = -1 if m.group(1) == "-" else 1
        coef = Fraction(sign)
        texp = Fraction(0)
        i = j = 0
        for raw in m.group(2).split("*"):
            f = _FACTOR.match(raw.strip())
            if not f:
                raise errors.SyntaxError(f"bad factor {raw.strip()!r}", _byte_offset(src, m.start(2)))
            if f.group("num"):
                coef *= _literal(f.group("num"), _byte_offset(src, m.start(2)))
                continue
            e = Fraction(f.group("exp")) if f.group("exp") else Fraction(1)
            name = f.group("var")
            if name == "t":
                texp += e
            elif e.denominator != 1:
                raise NonIntegerExponent(f"{name}^{e}")
            elif name == "x":
                i += int(e)
            else:
                j += int(e)
        terms[(i, j)] = terms.get((i, j), PuiseuxScalar()) + PuiseuxScalar.monomial(coef, texp)
        pos = m.end()
        first = False
    return PuiseuxBiPoly(terms)


def numeric_coefficients(F: PuiseuxBiPoly) -> dict[tuple[int, int], Fraction]:
    """Plain numeric coefficients of a polynomial that does not involve ``t``."""
    out = {}
    for ij, c in F.terms.items():
        if any(e != 0 for e, _ in c.terms):
            raise errors.UnsupportedFormat("coefficients must not involve t here")
        out[ij] = c.terms[0][1]
    return out


# ------------------------------------------------------------------- text output


def _coef_prefix(c: Fraction, has_var: bool) -> str:
    if has_var and c == 0:
        return ""
    s = format_scalar(c)
    return s + "*" if has_var else s


def _power(name: str, e) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{format_scalar(Fraction(e))}"


def poly_to_text(f: TropPoly) -> str:
    parts = []
    for e, c in f.items():
        var = _power("x", e)
        parts.append(_coef_prefix(c, bool(var)) + var)
    return " # ".join(parts)


def bipoly_to_text(f: TropBiPoly) -> str:
    parts = []
    for (i, j), c in f.items():
        var = "*".join(p for p in (_power("x", i), _power("y", j)) if p)
        parts.append(_coef_prefix(c, bool(var)) + var)
    return " # ".join(parts)


def _shift(g: TropPoly, K: Fraction) -> TropPoly:
    return TropPoly({e: c + K for e, c in g.items()}, extended=g.extended)


def pl_to_text(f: PLFunction) -> str:
    """Rational-function text ``(g) / (h)`` or a polynomial when there are no poles."""
    if classify(f) is FunctionClass.UNREPRESENTABLE:
        raise UnsupportedFormat("non-integer slopes have no rational text form")
    g, h, K = as_rational(f)
    num = poly_to_text(_shift(g, K))
    if classify(f) is FunctionClass.POLYNOMIAL:
        return num
    den = poly_to_text(h)
    return f"({num}) / ({den})" if len(h) > 1 else f"({num}) / {den}"


def to_text(obj) -> str:
    if isinstance(obj, TropPoly):
        return poly_to_text(obj)
    if isinstance(obj, TropBiPoly):
        return bipoly_to_text(obj)
    if isinstance(obj, PLFunction):
        return pl_to_text(obj)
    if isinstance(obj, Fraction) or obj is NEG_INF:
        return format_scalar(obj)
    raise UnsupportedFormat(f"no text form for {type(obj).__name__}")


# ------------------------------------------------------------------------- JSON


def _q(v) -> str:
    return format_scalar(v)


def to_json_obj(obj):
    """JSON-ready structure; rationals become ``"p/q"`` strings, -inf ``"ninf"``."""
    if isinstance(obj, TropPoly):
        return {"terms": [{"exp": _q(e), "coef": _q(c)} for e, c in obj.items()], "extended": obj.extended}
    if isinstance(obj, TropBiPoly):
        return {"terms": [{"exp": [i, j], "coef": _q(c)} for (i, j), c in obj.items()]}
    if isinstance(obj, PLFunction):
        return {
            "left_slope": _q(obj.left_slope),
            "anchor": [_q(obj.anchor[0]), _q(obj.anchor[1])],
            "breaks": [[_q(x), _q(w)] for x, w in obj.breaks],
            "extended": obj.extended,
        }
    if isinstance(obj, Factorization):
        return {"K": _q(obj.K), "r": obj.r, "roots": [_q(d) for d in obj.linear_roots]}
    if isinstance(obj, TropCurve):
        return {"vertices": [[_q(x), _q(y)] for x, y in obj.vertices], "edges": [_edge_json(e) for e in obj.edges]}
    if isinstance(obj, Fraction) or obj is NEG_INF:
        return _q(obj)
    if isinstance(obj, (list, tuple)):
        return [to_json_obj(v) for v in obj]
    if isinstance(obj, dict):
        return {k: to_json_obj(v) for k, v in obj.items()}
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    raise UnsupportedFormat(f"no JSON form for {type(obj).__name__}")


def _edge_json(e: Edge) -> dict:
    if e.kind == "segment":
        data = [[_q(e.start[0]), _q(e.start[1])], [_q(e.end[0]), _q(e.end[1])]]
    else:
        data = {"point": [_q(e.start[0]), _q(e.start[1])], "direction": list(e.direction)}
    return {"kind": e.kind, "data": data, "weight": e.weight, "terms": [list(t) for t in e.terms]}


def poly_from_json(obj) -> TropPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return TropPoly({t["exp"]: t["coef"] for t in obj["terms"]}, extended=obj.get("extended", False))


def plfunction_from_json(obj) -> PLFunction:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return PLFunction(
        Fraction(obj["left_slope"]),
        (Fraction(obj["anchor"][0]), Fraction(obj["anchor"][1])),
        tuple((Fraction(x), Fraction(w)) for x, w in obj["breaks"]),
        obj.get("extended", False),
    )


def curve_from_json(obj) -> TropCurve:
    if isinstance(obj, str):
        obj = json.loads(obj)
    edges = []
    for e in obj["edges"]:
        terms = tuple(tuple(t) for t in e.get("terms", []))
        if e["kind"] == "segment":
            (a, b) = [(Fraction(p[0]), Fraction(p[1])) for p in e["data"]]
            edges.append(Edge("segment", a, b, None, e["weight"], terms))
        else:
            p = e["data"]["point"]
            edges.append(Edge(e["kind"], (Fraction(p[0]), Fraction(p[1])), None,
                              tuple(e["data"]["direction"]), e["weight"], terms))
    vertices = tuple((Fraction(x), Fraction(y)) for x, y in obj["vertices"])
    return TropCurve(vertices, tuple(edges))


# -------------------------------------------------------------------- CSV / SVG


def _g(v) -> str:
    return f"{float(v):.12g}"


def pl_window(f: PLFunction) -> tuple[Fraction, Fraction]:
    """Window enclosing every breakpoint with a 10% margin on each side."""
    xs = f.positions or [Fraction(0)]
    lo, hi = min(xs), max(xs)
    span = hi - lo if hi > lo else Fraction(10)
    return lo - span / 10, hi + span / 10


def _pl_polyline(f: PLFunction, window=None) -> list[tuple[Fraction, Fraction]]:
    a, b = window if window is not None else pl_window(f)
    xs = [Fraction(a)] + [x for x in f.positions if a < x < b] + [Fraction(b)]
    return [(x, eval_pl(f, x)) for x in xs]


def _curve_box(curve: TropCurve):
    pts = list(curve.vertices) + [e.start for e in curve.edges]
    if not pts:
        return (Fraction(-1), Fraction(1), Fraction(-1), Fraction(1))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(2))
    pad = span / 2
    return (min(xs) - pad, max(xs) + pad, min(ys) - pad, max(ys) + pad)


def _clip_edge(e: Edge, box) -> tuple[tuple[float, float], tuple[float, float]]:
    x0, x1, y0, y1 = (float(v) for v in box)
    sx, sy = float(e.start[0]), float(e.start[1])
    if e.kind == "segment":
        return (sx, sy), (float(e.end[0]), float(e.end[1]))
    dx, dy = e.direction
    reach = 2 * ((x1 - x0) + (y1 - y0))
    far = (sx + reach * dx, sy + reach * dy)
    near = (sx - reach * dx, sy - reach * dy) if e.kind == "line" else (sx, sy)
    return near, far


def curve_csv_rows(curve: TropCurve, box=None):
    box = box or _curve_box(curve)
    for e in curve.edges:
        (ax, ay), (bx, by) = _clip_edge(e, box)
        yield e.kind, ax, ay, bx, by, e.weight


def to_csv(obj, window=None) -> str:
    out = io.StringIO()
    if isinstance(obj, TropPoly):
        from .plfn import to_plfunction

        obj = to_plfunction(obj)
    if isinstance(obj, PLFunction):
        out.write("x,y\n")
        for x, y in _pl_polyline(obj, window):
            out.write(f"{_g(x)},{_g(y)}\n")
    elif isinstance(obj, TropCurve):
        out.write("kind,x0,y0,x1,y1,weight\n")
        for kind, ax, ay, bx, by, w in curve_csv_rows(obj):
            out.write(f"{kind},{_g(ax)},{_g(ay)},{_g(bx)},{_g(by)},{w}\n")
    elif isinstance(obj, (list, tuple)):
        out.write("x,y\n")
        for x, y in obj:
            out.write(f"{_g(x)},{_g(y)}\n")
    else:
        raise UnsupportedFormat(f"no CSV form for {type(obj).__name__}")
    return out.getvalue()


class _Svg:
    """Minimal SVG 1.1 writer mapping a data box onto a fixed canvas."""

    def __init__(self, box, size=400, pad=20):
        self.x0, self.x1, self.y0, self.y1 = (float(v) for v in box)
        self.size = size
        self.pad = pad
        self.items: list[str] = []

    def map(self, x, y):
        w = self.size - 2 * self.pad
        px = self.pad + (float(x) - self.x0) / (self.x1 - self.x0) * w
        py = self.size - self.pad - (float(y) - self.y0) / (self.y1 - self.y0) * w
        return f"{px:.3f}", f"{py:.3f}"

    def line(self, a, b, width=1.0, color="black", dash=False):
        (ax, ay), (bx, by) = self.map(*a), self.map(*b)
        extra = ' stroke-dasharray="4 3"' if dash else ""
        self.items.append(
            f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="{color}" stroke-width="{width:g}"{extra}/>'
        )

    def polyline(self, pts, color="black", width=1.5):
        coords = " ".join(",".join(self.map(x, y)) for x, y in pts)
        self.items.append(f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="{width:g}"/>')

    def dot(self, x, y, r=2.0, color="black"):
        cx, cy = self.map(x, y)
        self.items.append(f'<circle cx="{cx}" cy="{cy}" r="{r:g}" fill="{color}"/>')

    def axes(self):
        if self.y0 <= 0 <= self.y1:
            self.line((self.x0, 0), (self.x1, 0), 0.5, "gray", dash=True)
        if self.x0 <= 0 <= self.x1:
            self.line((0, self.y0), (0, self.y1), 0.5, "gray", dash=True)

    def render(self) -> str:
        s = self.size
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" '
            f'viewBox="0 0 {s} {s}">\n'
            f'<rect x="0" y="0" width="{s}" height="{s}" fill="white"/>\n'
            f'<clipPath id="plot"><rect x="{self.pad}" y="{self.pad}" '
            f'width="{s - 2 * self.pad}" height="{s - 2 * self.pad}"/></clipPath>\n'
            '<g clip-path="url(#plot)">\n'
        )
        return head + "\n".join(self.items) + "\n</g>\n</svg>\n"


def _draw_curve(svg: _Svg, curve: TropCurve, box, color="black"):
    for e in curve.edges:
        a, b = _clip_edge(e, box)
        svg.line(a, b, 1.0 + e.weight, color)
    for v in curve.vertices:
        svg.dot(*v, r=3.0, color=color)


def to_svg(obj, window=None, overlay: TropCurve | None = None) -> str:
    if isinstance(obj, TropPoly):
        from .plfn import to_plfunction

        obj = to_plfunction(obj)
    if isinstance(obj, PLFunction):
        pts = _pl_polyline(obj, window)
        ys = [y for _, y in pts]
        ylo, yhi = min(ys), max(ys)
        yspan = yhi - ylo if yhi > ylo else Fraction(2)
        box = (pts[0][0], pts[-1][0], ylo - yspan / 10, yhi + yspan / 10)
        svg = _Svg(box)
        svg.axes()
        svg.polyline(pts, "navy")
        for x, y in pts[1:-1]:
            svg.dot(x, y, 2.5, "crimson")
        return svg.render()
    if isinstance(obj, TropCurve):
        box = window or _curve_box(obj)
        svg = _Svg(box)
        svg.axes()
        _draw_curve(svg, obj, box)
        return svg.render()
    if isinstance(obj, (list, tuple)):
        box = window or (-4, 4, -4, 4)
        svg = _Svg(box)
        svg.axes()
        for x, y in obj:
            svg.dot(x, y, 1.0, "steelblue")
        if overlay is not None:
            _draw_curve(svg, overlay, box, "crimson")
        return svg.render()
    raise UnsupportedFormat(f"no SVG form for {type(obj).__name__}")


def render(obj, fmt: str = "json", **kwargs) -> bytes:
    """Serialize ``obj`` as ``json``, ``text``, ``csv`` or ``svg`` (deterministic bytes)."""
    if fmt == "json":
        text = json.dumps(to_json_obj(obj)) + "\n"
    elif fmt == "text":
        text = to_text(obj) + "\n"
    elif fmt == "csv":
        text = to_csv(obj, **kwargs)
    elif fmt == "svg":
        text = to_svg(obj, **kwargs)
    else:
        raise UnsupportedFormat(f"unknown format {fmt!r}")
    return text.encode("utf-8")
