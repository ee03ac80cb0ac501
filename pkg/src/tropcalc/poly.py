"""Univariate tropical polynomials.

A :class:`TropPoly` is a finite map ``exponent -> coefficient``; a missing
exponent stands for a ``-inf`` coefficient.  As a function it is
``x -> max(coef + exp * x)``, convex and piecewise linear.  Two canonical
representatives exist for every function:

* the *maximal* form, where every exponent between the lowest and the highest
  is present with the largest coefficient that leaves the function unchanged
  (the upper concave envelope of the points ``(exp, coef)``);
* the *compact* form, which keeps only the vertices of that envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .core import NEG_INF, TropScalar, scalar, trop_add
from .errors import (
    ExponentOutOfRange,
    ExtendedNotSupported,
    NegativeExponent,
    NonIntegerExponent,
    SingleTerm,
    ZeroPolynomial,
)

__all__ = [
    "TropPoly",
    "Factorization",
    "monomial",
    "constant",
    "eval_poly",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "poly_arith",
    "breakpoints",
    "legendre",
    "maximalize",
    "raise_coefficient",
    "compactify",
    "equivalent",
    "roots",
    "factor",
    "expand",
    "dominance_thresholds",
    "upper_hull",
]


class TropPoly:
    """Immutable tropical polynomial in one variable.

    ``terms`` maps exponents to finite coefficients.  ``-inf`` coefficients are
    dropped on construction.  Unless ``extended`` is set, exponents must be
    nonnegative integers; the extended variant admits nonnegative rationals.
    """

    __slots__ = ("_terms", "extended", "_hash", "_scaled")

    def __init__(self, terms: Mapping | Iterable, extended: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Fraction, Fraction] = {}
        for e, c in items:
            e = Fraction(e)
            c = scalar(c)
            if e < 0:
                raise NegativeExponent(f"negative exponent {e}")
            if not extended and e.denominator != 1:
                raise NonIntegerExponent(f"exponent {e} requires the extended variant")
            if c is NEG_INF:
                continue
            if e in clean:
                clean[e] = max(clean[e], c)
            else:
                clean[e] = c
        if not clean:
            raise ZeroPolynomial("polynomial has no finite coefficient")
        self._terms = tuple(sorted(clean.items(), reverse=True))
        self.extended = bool(extended)
        self._hash = None
        self._scaled = None

    @property
    def terms(self) -> dict[Fraction, Fraction]:
        return dict(self._terms)

    def items(self):
        """``(exponent, coefficient)`` pairs in decreasing exponent order."""
        return self._terms

    @property
    def degree(self) -> Fraction:
        return self._terms[0][0]

    @property
    def order(self) -> Fraction:
        return self._terms[-1][0]

    @property
    def leading_coefficient(self) -> Fraction:
        return self._terms[0][1]

    def coefficient(self, exp) -> TropScalar:
        return dict(self._terms).get(Fraction(exp), NEG_INF)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TropPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self):
        return f"TropPoly({self})"

    def __str__(self):
        from .textio import poly_to_text

        return poly_to_text(self)

    def __call__(self, x):
        return eval_poly(self, x)

    def __add__(self, other):
        return poly_add(self, _as_poly(other, self.extended))

    __radd__ = __add__

    def __mul__(self, other):
        return poly_mul(self, _as_poly(other, self.extended))

    __rmul__ = __mul__

    def __pow__(self, k):
        return poly_pow(self, k)


def _as_poly(obj, extended=False) -> TropPoly:
    if isinstance(obj, TropPoly):
        return obj
    return constant(obj, extended=extended)


def monomial(coef, exp, extended: bool = False) -> TropPoly:
    return TropPoly({exp: coef}, extended=extended)


def constant(coef, extended: bool = False) -> TropPoly:
    return TropPoly({0: coef}, extended=extended)


def _scaled_terms(f: TropPoly):
    # integer numerators over one common denominator; Fraction arithmetic is the hot spot
    if f._scaled is None:
        den = 1
        for e, c in f.items():
            den = math.lcm(den, e.denominator, c.denominator)
        pairs = tuple((int(e * den), int(c * den)) for e, c in f.items())
        f._scaled = (den, pairs)
    return f._scaled


def eval_poly(f: TropPoly, x) -> TropScalar:
    x = scalar(x)
    if x is NEG_INF:
        return f.coefficient(0)
    den, pairs = _scaled_terms(f)
    p, q = x.numerator, x.denominator
    return Fraction(max(c * q + e * p for e, c in pairs), den * q)


def poly_add(f: TropPoly, g: TropPoly) -> TropPoly:
    terms = dict(f.items())
    for e, c in g.items():
        terms[e] = trop_add(terms.get(e, NEG_INF), c)
    return TropPoly(terms, extended=f.extended or g.extended)


def poly_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    terms: dict[Fraction, Fraction] = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            c = c1 + c2
            if e not in terms or terms[e] < c:
                terms[e] = c
    return TropPoly(terms, extended=f.extended or g.extended)


def poly_pow(f: TropPoly, k) -> TropPoly:
    """Tropical power by repeated multiplication (integer ``k``).

    Extended polynomials also accept a rational ``k``; the result then scales
    coefficients and exponents, which is the same function as ``k * f(x)``.
    """
    k = Fraction(k)
    if k < 0:
        raise NegativeExponent(f"negative exponent {k}")
    if k.denominator != 1:
        if not f.extended:
            raise NonIntegerExponent(f"power {k} requires the extended variant")
        return TropPoly({k * e: k * c for e, c in f.items()}, extended=True)
    result = constant(0, extended=f.extended)
    base = f
    n = int(k)
    while n:
        if n & 1:
            result = poly_mul(result, base)
        n >>= 1
        if n:
            base = poly_mul(base, base)
    return result


def poly_arith(f: TropPoly, g: TropPoly | None, op: str, k=None) -> TropPoly:
    """Dispatch helper: ``op`` is ``"add"``, ``"mul"`` or ``"pow"`` (with ``k``)."""
    if op == "add":
        return poly_add(f, g)
    if op == "mul":
        return poly_mul(f, g)
    if op == "pow":
        return poly_pow(f, k)
    raise ValueError(f"unknown polynomial operation {op!r}")


def breakpoints(f: TropPoly) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Corners of the graph of ``f`` as ``(x, exp_left, exp_right)``.

    Found by marching from the term that dominates at ``-inf`` to the one that
    dominates at ``+inf``, always jumping to the earliest crossing.  Ties
    between crossings go to the steeper term, so terms that merely touch a
    corner are skipped.
    """
    items = sorted(f.items())
    out = []
    i = 0
    while i < len(items) - 1:
        e0, c0 = items[i]
        best_x = None
        best_j = None
        for j in range(i + 1, len(items)):
            e1, c1 = items[j]
            x = (c0 - c1) / (e1 - e0)
            if best_x is None or x <= best_x:
                best_x, best_j = x, j
        out.append((best_x, e0, items[best_j][0]))
        i = best_j
    return out


def legendre(f: TropPoly, p) -> Fraction:
    """Modified Legendre transform ``max_x (p*x - f(x))`` for ``p`` in ``[order, degree]``."""
    p = Fraction(p)
    if not (f.order <= p <= f.degree):
        raise ExponentOutOfRange(f"{p} outside [{f.order}, {f.degree}]: transform diverges")
    corners = breakpoints(f)
    if not corners:
        return -f.leading_coefficient
    return max(p * x - eval_poly(f, x) for x, _, _ in corners)


def upper_hull(f: TropPoly) -> list[tuple[Fraction, Fraction]]:
    """Strict vertices of the upper concave envelope of ``(exp, coef)``."""
    hull: list[tuple[Fraction, Fraction]] = []
    for pt in sorted(f.items()):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it makes a strict right turn
            if (x2 - x1) * (pt[1] - y1) - (y2 - y1) * (pt[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(pt)
    return hull


def _hull_value(hull, e: Fraction) -> Fraction:
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        if x1 <= e <= x2:
            return y1 + (y2 - y1) * (e - x1) / (x2 - x1)
    if len(hull) == 1 and hull[0][0] == e:
        return hull[0][1]
    raise ExponentOutOfRange(f"{e} outside the exponent range")


def maximalize(f: TropPoly) -> TropPoly:
    """Maximal representative: each coefficient raised to the envelope.

    For standard polynomials every integer exponent in ``[order, degree]`` is
    filled in.  Extended polynomials have infinitely many rational exponents
    in that range, so only the stored exponents are raised.
    """
    hull = upper_hull(f)
    if f.extended:
        exps = [e for e, _ in f.items()]
    else:
        exps = range(int(f.order), int(f.degree) + 1)
    return TropPoly({e: _hull_value(hull, Fraction(e)) for e in exps}, extended=f.extended)


def raise_coefficient(f: TropPoly, k) -> Fraction:
    """Largest coefficient for ``x^k`` that leaves ``f`` unchanged (``order < k < degree``).

    If the line ``a_k + k*x`` already shows on the graph, ``a_k`` is returned.
    Otherwise the line is lifted until it touches a corner formed by a lower
    term ``i`` and a higher term ``j``, giving
    ``(a_i - a_j) * (j - k) / (j - i) + a_j``; the highest such touch wins.
    """
    k = Fraction(k)
    if not (f.order < k < f.degree):
        raise ExponentOutOfRange(f"{k} not strictly inside ({f.order}, {f.degree})")
    terms = f.terms
    lower = [(i, a) for i, a in terms.items() if i < k]
    upper = [(j, a) for j, a in terms.items() if j > k]
    lifted = max((ai - aj) * (j - k) / (j - i) + aj for i, ai in lower for j, aj in upper)
    current = terms.get(k, NEG_INF)
    if current is not NEG_INF and current >= lifted:
        return current
    return lifted


def compactify(f: TropPoly) -> TropPoly:
    """Fewest-term representative: keep only terms that alone attain the max somewhere."""
    return TropPoly(dict(upper_hull(f)), extended=f.extended)


def equivalent(f: TropPoly, g: TropPoly) -> bool:
    """True iff ``f`` and ``g`` define the same function."""
    if f.extended or g.extended:
        return compactify(f).items() == compactify(g).items()
    return maximalize(f) == maximalize(g)


def roots(f: TropPoly) -> list[tuple[TropScalar, Fraction]]:
    """Roots with multiplicities, ``-inf`` first (if ``order > 0``) then ascending."""
    out: list[tuple[TropScalar, Fraction]] = []
    if f.order > 0:
        out.append((NEG_INF, f.order))
    if f.extended:
        hull = upper_hull(f)
        for (e0, c0), (e1, c1) in zip(hull, hull[1:]):
            out.append(((c0 - c1) / (e1 - e0), e1 - e0))
        return out
    coeffs = [c for _, c in sorted(maximalize(f).items())]
    for prev, cur in zip(coeffs, coeffs[1:]):
        d = prev - cur
        if len(out) > 0 and out[-1][0] == d:
            out[-1] = (d, out[-1][1] + 1)
        else:
            out.append((d, Fraction(1)))
    return out


@dataclass(frozen=True)
class Factorization:
    """``K * x^r * (x + d_1) * ... * (x + d_m)`` in tropical notation."""

    K: Fraction
    r: int
    linear_roots: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "K", Fraction(self.K))
        ds = [d if d is NEG_INF else Fraction(d) for d in self.linear_roots]
        object.__setattr__(self, "linear_roots", tuple(sorted(ds)))

    @property
    def degree(self) -> int:
        return self.r + len(self.linear_roots)


def factor(f: TropPoly) -> Factorization:
    if f.extended:
        raise ExtendedNotSupported("factorization into linear factors needs integer exponents")
    m = maximalize(f)
    coeffs = [c for _, c in sorted(m.items())]
    linear = [prev - cur for prev, cur in zip(coeffs, coeffs[1:])]
    return Factorization(K=m.leading_coefficient, r=int(m.order), linear_roots=tuple(linear))


def expand(fac: Factorization) -> TropPoly:
    """Multiply out a factorization using running sums of the roots (largest first)."""
    r = fac.r
    finite = []
    for d in fac.linear_roots:
        if d is NEG_INF:
            r += 1
        else:
            finite.append(Fraction(d))
    finite.sort(reverse=True)
    n = r + len(finite)
    terms = {n: fac.K}
    coef = fac.K
    for k, d in enumerate(finite, start=1):
        coef = coef + d
        terms[n - k] = coef
    return TropPoly(terms)


def dominance_thresholds(f: TropPoly) -> tuple[Fraction, Fraction]:
    """``(M, m)``: the top term alone attains the max for ``x > M``, the bottom one for ``x < m``."""
    if len(f) < 2:
        raise SingleTerm("thresholds are undefined for a monomial")
    n, a_n = f.items()[0]
    r, a_r = f.items()[-1]
    big = max((a_k - a_n) / (n - k) for k, a_k in f.items()[1:])
    small = min((a_r - a_k) / (k - r) for k, a_k in f.items()[:-1])
    return big, small

