"""Tropical meromorphic functions stored as piecewise-linear data.

A :class:`PLFunction` is determined by its slope at ``-inf``, one point on its
graph, and the finite list of breakpoints with their slope jumps ``omega``.
Positive jumps are roots, negative ones poles; the slope at ``-inf`` decides
whether ``-inf`` itself is a root (slope > 0) or a pole (slope < 0).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import NEG_INF, scalar
from .errors import (
    EmptyInterval,
    InvalidPrescription,
    NonIntegerExponent,
    NotRational,
    OverlappingPrescription,
)
from .poly import TropPoly, eval_poly, poly_mul, roots as poly_roots

__all__ = [
    "PLFunction",
    "Prescription",
    "FunctionClass",
    "constant_pl",
    "eval_pl",
    "omega",
    "roots_and_poles",
    "classify",
    "from_prescription",
    "poly_coeffs_from_roots",
    "to_plfunction",
    "quotient",
    "as_rational",
    "pl_arith",
    "tadd",
    "tmul",
    "tdiv",
    "shift_equivalent",
    "is_entire_and_bounded",
    "extrema_on_interval",
]


def _is_int(q: Fraction) -> bool:
    return q.denominator == 1


@dataclass(frozen=True)
class PLFunction:
    """Continuous piecewise-linear function with finitely many breakpoints.

    The anchor may be given at any point of the graph; it is moved to one unit
    left of the first breakpoint so equal functions compare equal.  Breaks at
    the same position are merged and zero jumps dropped.
    """

    left_slope: Fraction
    anchor: tuple[Fraction, Fraction]
    breaks: tuple[tuple[Fraction, Fraction], ...] = ()
    extended: bool = False

    def __post_init__(self):
        m = Fraction(self.left_slope)
        merged: dict[Fraction, Fraction] = {}
        for x, w in self.breaks:
            x, w = Fraction(x), Fraction(w)
            merged[x] = merged.get(x, Fraction(0)) + w
        breaks = tuple((x, w) for x, w in sorted(merged.items()) if w != 0)
        if not self.extended:
            total = m
            if not _is_int(total):
                raise NonIntegerExponent(f"slope {total} requires the extended variant")
            for _, w in breaks:
                total += w
                if not _is_int(total):
                    raise NonIntegerExponent(f"slope {total} requires the extended variant")
        x_given, v_given = Fraction(self.anchor[0]), Fraction(self.anchor[1])
        x0 = breaks[0][0] - 1 if breaks else Fraction(0)
        v0 = v_given - m * (x_given - x0) - sum(w * (x_given - b) for b, w in breaks if b < x_given)
        object.__setattr__(self, "left_slope", m)
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "anchor", (x0, v0))
        object.__setattr__(self, "extended", bool(self.extended))

    @property
    def right_slope(self) -> Fraction:
        return self.left_slope + sum((w for _, w in self.breaks), Fraction(0))

    def slopes(self) -> list[Fraction]:
        """Slopes of the pieces from left to right (``len(breaks) + 1`` values)."""
        out = [self.left_slope]
        for _, w in self.breaks:
            out.append(out[-1] + w)
        return out

    @property
    def positions(self) -> list[Fraction]:
        return [x for x, _ in self.breaks]

    def __call__(self, x):
        return eval_pl(self, x)


def constant_pl(value, extended: bool = False) -> PLFunction:
    return PLFunction(Fraction(0), (Fraction(0), Fraction(value)), (), extended)


def eval_pl(f: PLFunction, x) -> Fraction:
    x = Fraction(x)
    x0, v0 = f.anchor
    value = v0 + f.left_slope * (x - x0)
    for b, w in f.breaks:
        if b >= x:
            break
        value += w * (x - b)
    return value


def omega(f: PLFunction, x) -> Fraction:
    """Slope jump of ``f`` at ``x`` (0 away from breakpoints)."""
    x = Fraction(x)
    for b, w in f.breaks:
        if b == x:
            return w
    return Fraction(0)


def _minus_infinity(f: PLFunction) -> tuple[str, Fraction]:
    m = f.left_slope
    if m > 0:
        return ("root", m)
    if m < 0:
        return ("pole", -m)
    return ("ordinary", Fraction(0))


def roots_and_poles(f: PLFunction):
    """``(roots, poles, (kind, multiplicity))`` where ``kind`` classifies ``-inf``."""
    roots = [(x, w) for x, w in f.breaks if w > 0]
    poles = [(x, -w) for x, w in f.breaks if w < 0]
    return roots, poles, _minus_infinity(f)


class FunctionClass(str, enum.Enum):
    POLYNOMIAL = "Polynomial"
    RATIONAL = "Rational"
    UNREPRESENTABLE = "Unrepresentable"


def classify(f: PLFunction) -> FunctionClass:
    if not all(_is_int(s) for s in f.slopes()):
        return FunctionClass.UNREPRESENTABLE
    if f.left_slope >= 0 and all(w > 0 for _, w in f.breaks):
        return FunctionClass.POLYNOMIAL
    return FunctionClass.RATIONAL


@dataclass(frozen=True)
class Prescription:
    """Finite sets of roots and poles (``(location, multiplicity)`` pairs).

    Exactly one of ``K`` or ``anchor`` fixes the additive constant; with
    neither, ``K = 0`` is used.  ``-inf`` may appear once across both lists.
    """

    roots: tuple = ()
    poles: tuple = ()
    K: Optional[Fraction] = None
    anchor: Optional[tuple[Fraction, Fraction]] = None
    extended: bool = False

    def __post_init__(self):
        def clean(entries):
            out = []
            for loc, mult in entries:
                loc = scalar(loc)
                mult = Fraction(mult)
                if mult <= 0:
                    raise InvalidPrescription(f"multiplicity {mult} must be positive")
                if not self.extended and not _is_int(mult):
                    raise NonIntegerExponent(f"multiplicity {mult} requires the extended variant")
                out.append((loc, mult))
            return tuple(out)

        roots, poles = clean(self.roots), clean(self.poles)
        root_locs = [loc for loc, _ in roots]
        pole_locs = [loc for loc, _ in poles]
        if len(set(root_locs)) != len(root_locs) or len(set(pole_locs)) != len(pole_locs):
            raise InvalidPrescription("repeated location; add multiplicities instead")
        if (root_locs + pole_locs).count(NEG_INF) > 1:
            raise InvalidPrescription("-inf may be prescribed at most once")
        overlap = set(root_locs) & set(pole_locs)
        if overlap:
            raise OverlappingPrescription(f"locations are both root and pole: {sorted(map(str, overlap))}")
        if self.K is not None and self.anchor is not None:
            raise InvalidPrescription("give either K or an anchor, not both")
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "poles", poles)
        if self.K is not None:
            object.__setattr__(self, "K", Fraction(self.K))
        if self.anchor is not None:
            object.__setattr__(self, "anchor", (Fraction(self.anchor[0]), Fraction(self.anchor[1])))


def from_prescription(p: Prescription) -> PLFunction:
    """The unique (up to the constant) function with the prescribed roots and poles.

    With ``K`` given, the function equals
    ``K * x^m * prod (x + b_i)^m_i / prod (x + c_j)^n_j`` (tropically), which to
    the left of every finite location reduces to
    ``K + sum m_i b_i - sum n_j c_j + m * x``.
    """
    left = Fraction(0)
    breaks = []
    for loc, mult in p.roots:
        if loc is NEG_INF:
            left += mult
        else:
            breaks.append((loc, mult))
    for loc, mult in p.poles:
        if loc is NEG_INF:
            left -= mult
        else:
            breaks.append((loc, -mult))
    if p.anchor is not None:
        anchor = p.anchor
    else:
        K = p.K if p.K is not None else Fraction(0)
        x0 = min(x for x, _ in breaks) - 1 if breaks else Fraction(0)
        anchor = (x0, K + sum(w * x for x, w in breaks) + left * x0)
    return PLFunction(left, anchor, tuple(breaks), p.extended)


def poly_coeffs_from_roots(roots: Iterable) -> TropPoly:
    """Monic maximal polynomial with the given finite roots.

    Sorting the roots as ``b_1 <= ... <= b_n``, the coefficients are
    ``a_n = 0``, ``a_{n-1} = b_n`` and ``a_i = b_{i+1} + a_{i+1}``.
    """
    b = sorted(Fraction(r) for r in roots)
    n = len(b)
    coeffs = {n: Fraction(0)}
    if n:
        coeffs[n - 1] = b[n - 1]
        for i in range(n - 2, -1, -1):
            coeffs[i] = b[i] + coeffs[i + 1]
    return TropPoly(coeffs)


def to_plfunction(f: TropPoly) -> PLFunction:
    """Piecewise-linear data of a tropical polynomial."""
    breaks = [(x, w) for x, w in poly_roots(f) if x is not NEG_INF]
    x0 = breaks[0][0] - 1 if breaks else Fraction(0)
    return PLFunction(f.order, (x0, eval_poly(f, x0)), tuple(breaks), f.extended)


def quotient(g: TropPoly, h: TropPoly) -> PLFunction:
    """The function ``g(x) - h(x)`` (tropical division ``g / h``)."""
    return tdiv(to_plfunction(g), to_plfunction(h))


def _expand_multiset(entries) -> tuple[list[Fraction], int]:
    finite: list[Fraction] = []
    at_neg_inf = 0
    for loc, mult in entries:
        if loc is NEG_INF:
            at_neg_inf += int(mult)
        else:
            finite.extend([loc] * int(mult))
    return finite, at_neg_inf


def as_rational(f: PLFunction) -> tuple[TropPoly, TropPoly, Fraction]:
    """Split ``f`` as ``K * g / h`` with monic polynomials ``g`` (roots) and ``h`` (poles).

    ``h`` is the constant ``0`` when ``f`` is a polynomial.
    """
    if classify(f) is FunctionClass.UNREPRESENTABLE:
        raise NotRational("non-integer slopes cannot come from integer exponents")
    roots, poles, (kind, mult) = roots_and_poles(f)
    if kind == "root":
        roots = roots + [(NEG_INF, mult)]
    elif kind == "pole":
        poles = poles + [(NEG_INF, mult)]
    g_roots, g_shift = _expand_multiset(roots)
    h_roots, h_shift = _expand_multiset(poles)
    g = poly_coeffs_from_roots(g_roots)
    h = poly_coeffs_from_roots(h_roots)
    if g_shift:
        g = poly_mul(g, TropPoly({g_shift: 0}))
    if h_shift:
        h = poly_mul(h, TropPoly({h_shift: 0}))
    x0 = f.anchor[0]
    K = eval_pl(f, x0) - (eval_poly(g, x0) - eval_poly(h, x0))
    return g, h, K


def _from_samples(xs: Sequence[Fraction], values: Sequence[Fraction], left: Fraction,
                  right: Fraction, extended: bool) -> PLFunction:
    slopes = [left]
    for i in range(1, len(xs)):
        slopes.append((values[i] - values[i - 1]) / (xs[i] - xs[i - 1]))
    slopes.append(right)
    breaks = [(x, slopes[i + 1] - slopes[i]) for i, x in enumerate(xs)]
    return PLFunction(left, (xs[0], values[0]), tuple(breaks), extended)


def _crossings(f: PLFunction, g: PLFunction, xs: list[Fraction]) -> list[Fraction]:
    """Points where ``f - g`` changes sign strictly inside a linear piece."""
    out = []
    d = [eval_pl(f, x) - eval_pl(g, x) for x in xs]
    lslope = f.left_slope - g.left_slope
    if lslope != 0:
        x = xs[0] - d[0] / lslope
        if x < xs[0]:
            out.append(x)
    for (p, dp), (q, dq) in zip(zip(xs, d), zip(xs[1:], d[1:])):
        if (dp < 0 < dq) or (dq < 0 < dp):
            out.append(p - dp * (q - p) / (dq - dp))
    rslope = f.right_slope - g.right_slope
    if rslope != 0:
        x = xs[-1] - d[-1] / rslope
        if x > xs[-1]:
            out.append(x)
    return out


def pl_arith(f: PLFunction, g: PLFunction, op: str) -> PLFunction:
    """Pointwise ``tadd`` (max), ``tmul`` (sum) or ``tdiv`` (difference)."""
    extended = f.extended or g.extended
    xs = sorted(set(f.positions) | set(g.positions) | {Fraction(0)})
    if op == "tmul":
        values = [eval_pl(f, x) + eval_pl(g, x) for x in xs]
        return _from_samples(xs, values, f.left_slope + g.left_slope, f.right_slope + g.right_slope, extended)
    if op == "tdiv":
        values = [eval_pl(f, x) - eval_pl(g, x) for x in xs]
        return _from_samples(xs, values, f.left_slope - g.left_slope, f.right_slope - g.right_slope, extended)
    if op == "tadd":
        xs = sorted(set(xs) | set(_crossings(f, g, xs)))
        values = [max(eval_pl(f, x), eval_pl(g, x)) for x in xs]
        lo, hi = xs[0] - 1, xs[-1] + 1
        left = f.left_slope if eval_pl(f, lo) >= eval_pl(g, lo) else g.left_slope
        right = f.right_slope if eval_pl(f, hi) >= eval_pl(g, hi) else g.right_slope
        return _from_samples(xs, values, left, right, extended)
    raise ValueError(f"unknown operation {op!r}")


def tadd(f: PLFunction, g: PLFunction) -> PLFunction:
    return pl_arith(f, g, "tadd")


def tmul(f: PLFunction, g: PLFunction) -> PLFunction:
    return pl_arith(f, g, "tmul")


def tdiv(f: PLFunction, g: PLFunction) -> PLFunction:
    return pl_arith(f, g, "tdiv")


def shift_equivalent(f: PLFunction, g: PLFunction) -> Optional[tuple[Fraction, Fraction]]:
    """``(m, b)`` with ``f(x) = g(x) + m*x + b`` if such an affine shift exists.

    Behaviour at ``-inf`` is ignored, as for functions defined on the reals.
    """
    if f.breaks != g.breaks:
        return None
    return f.left_slope - g.left_slope, eval_pl(f, 0) - eval_pl(g, 0)


def is_entire_and_bounded(f: PLFunction) -> tuple[bool, bool]:
    entire = f.left_slope >= 0 and all(w > 0 for _, w in f.breaks)
    bounded = f.left_slope == 0 and f.right_slope == 0
    return entire, bounded


def extrema_on_interval(f: PLFunction, a, b) -> tuple[Fraction, Fraction]:
    """Exact ``(min, max)`` of ``f`` over ``[a, b]``."""
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise EmptyInterval(f"[{a}, {b}] is empty")
    values = [eval_pl(f, a), eval_pl(f, b)]
    values.extend(eval_pl(f, x) for x in f.positions if a < x < b)
    return min(values), max(values)
