"""Bivariate tropical polynomials, their curves, and tropicalization.

The tropical curve of ``f(x, y) = max(a_ij + i*x + j*y)`` is the set where
the maximum is attained at least twice.  It is computed exactly: for every
pair of terms the tie line is cut down to the interval where that pair
dominates all other terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

import numpy as np

from .core import NEG_INF, TropScalar, scalar, trop_mul, trop_pow
from .errors import DegenerateInY, EmptyCurve, NegativeExponent, ZeroPolynomial

Point = tuple[Fraction, Fraction]


class TropBiPoly:
    """Immutable tropical polynomial in ``x`` and ``y`` (integer exponents)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping):
        clean = {}
        for (i, j), c in terms.items():
            if int(i) != i or int(j) != j:
                raise NegativeExponent(f"exponents must be integers, got ({i}, {j})")
            if i < 0 or j < 0:
                raise NegativeExponent(f"negative exponent ({i}, {j})")
            c = scalar(c)
            if c is NEG_INF:
                continue
            key = (int(i), int(j))
            clean[key] = max(clean[key], c) if key in clean else c
        if not clean:
            raise ZeroPolynomial("polynomial has no finite coefficient")
        self._terms = tuple(sorted(clean.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0])))

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TropBiPoly):
            return NotImplemented
        return sorted(self._terms) == sorted(other._terms)

    def __hash__(self):
        return hash(tuple(sorted(self._terms)))

    def __repr__(self):
        return f"TropBiPoly({self})"

    def __str__(self):
        from .textio import bipoly_to_text

        return bipoly_to_text(self)


def eval2(f: TropBiPoly, x, y) -> TropScalar:
    x, y = scalar(x), scalar(y)
    return max(trop_mul(c, trop_mul(trop_pow(x, i), trop_pow(y, j))) for (i, j), c in f.items())


def achieving_terms(f: TropBiPoly, p) -> list[tuple[int, int]]:
    """Exponents of the terms attaining the maximum at ``p``."""
    x, y = Fraction(p[0]), Fraction(p[1])
    values = [(c + i * x + j * y, ij) for ij, c in f.items() for i, j in [ij]]
    top = max(v for v, _ in values)
    return sorted(ij for v, ij in values if v == top)


def on_curve(f: TropBiPoly, p) -> bool:
    return len(achieving_terms(f, p)) >= 2


@dataclass(frozen=True)
class Edge:
    """One cell of a tropical curve.

    ``kind`` is ``"segment"`` (``start`` to ``end``), ``"ray"`` (``start`` plus
    primitive ``direction``) or ``"line"`` (a point on it plus ``direction``;
    only for curves without vertices).
    """

    kind: str
    start: Point
    end: Optional[Point]
    direction: Optional[tuple[int, int]]
    weight: int
    terms: tuple[tuple[int, int], ...]

    def point_at(self, s: Fraction) -> Point:
        """Point at parameter ``s`` (``s`` in [0, 1] for segments, ``s >= 0`` for rays)."""
        if self.kind == "segment":
            return (self.start[0] + s * (self.end[0] - self.start[0]),
                    self.start[1] + s * (self.end[1] - self.start[1]))
        return (self.start[0] + s * self.direction[0], self.start[1] + s * self.direction[1])


@dataclass(frozen=True)
class TropCurve:
    vertices: tuple[Point, ...]
    edges: tuple[Edge, ...]

    def __bool__(self):
        return bool(self.edges)


def _primitive(dx: int, dy: int) -> tuple[int, int]:
    g = math.gcd(dx, dy)
    return dx // g, dy // g


def _lattice_length(exps) -> int:
    """Lattice length of the segment spanned by collinear exponent vectors."""
    pts = sorted(exps)
    (i0, j0), (i1, j1) = pts[0], pts[-1]
    return math.gcd(abs(i1 - i0), abs(j1 - j0))


def tropical_curve(f: TropBiPoly) -> TropCurve:
    items = list(f.items())
    cells = {}
    for a in range(len(items)):
        (ip, jp), cp = items[a]
        for b in range(a + 1, len(items)):
            (iq, jq), cq = items[b]
            di, dj = ip - iq, jp - jq
            # tie line: di*x + dj*y = cq - cp, parametrised as base + s*direction
            if di != 0:
                base = ((cq - cp) / di, Fraction(0))
            else:
                base = (Fraction(0), (cq - cp) / dj)
            direction = _primitive(-dj, di)
            lo, hi = None, None
            empty = False
            for (ir, jr), cr in items:
                if (ir, jr) in ((ip, jp), (iq, jq)):
                    continue
                # value_p - value_r along the line: const + rate * s >= 0
                const = cp - cr + (ip - ir) * base[0] + (jp - jr) * base[1]
                rate = (ip - ir) * direction[0] + (jp - jr) * direction[1]
                if rate == 0:
                    if const < 0:
                        empty = True
                        break
                elif rate > 0:
                    bound = -const / rate
                    lo = bound if lo is None else max(lo, bound)
                else:
                    bound = -const / rate
                    hi = bound if hi is None else min(hi, bound)
            if empty or (lo is not None and hi is not None and lo >= hi):
                continue
            cell = _make_cell(base, direction, lo, hi)
            if cell not in cells:
                cells[cell] = (base, direction, lo, hi)
    edges = []
    vertices = set()
    for (kind, start, end, direction), (base, d, lo, hi) in cells.items():
        if lo is not None and hi is not None:
            mid = (lo + hi) / 2
        elif lo is not None:
            mid = lo + 1
        elif hi is not None:
            mid = hi - 1
        else:
            mid = Fraction(0)
        probe = (base[0] + mid * d[0], base[1] + mid * d[1])
        tied = tuple(achieving_terms(f, probe))
        edges.append(Edge(kind, start, end, direction, _lattice_length(tied), tied))
        if kind in ("segment", "ray"):
            vertices.add(start)
        if kind == "segment":
            vertices.add(end)
    edges.sort(key=lambda e: (e.kind, e.start, e.end or (0, 0), e.direction or (0, 0)))
    return TropCurve(tuple(sorted(vertices)), tuple(edges))


def _make_cell(base, d, lo, hi):
    def at(s):
        return (base[0] + s * d[0], base[1] + s * d[1])

    if lo is not None and hi is not None:
        p, q = sorted([at(lo), at(hi)])
        return ("segment", p, q, None)
    if lo is not None:
        return ("ray", at(lo), None, d)
    if hi is not None:
        return ("ray", at(hi), None, (-d[0], -d[1]))
    # whole line: canonical point is the one closest to the chosen base, direction normalised
    nd = d if (d[0], d[1]) > (0, 0) else (-d[0], -d[1])
    return ("line", _canonical_line_point(base, nd), None, nd)


def _canonical_line_point(base, d):
    # intersection with the axis x = 0 (or y = 0 for vertical lines)
    if d[0] != 0:
        s = -base[0] / d[0]
    else:
        s = -base[1] / d[1]
    return (base[0] + s * d[0], base[1] + s * d[1])


def balancing(curve: TropCurve) -> dict[Point, tuple[int, int]]:
    """Weighted sum of primitive outgoing directions at each vertex."""
    sums = {v: [0, 0] for v in curve.vertices}

    def add(v, vec, w):
        dx, dy = vec
        g = math.gcd(int(dx), int(dy))
        sums[v][0] += w * int(dx) // g
        sums[v][1] += w * int(dy) // g

    for e in curve.edges:
        if e.kind == "ray":
            add(e.start, e.direction, e.weight)
        elif e.kind == "segment":
            vec = (e.end[0] - e.start[0], e.end[1] - e.start[1])
            # segments join lattice-aligned directions, scale to integers
            den = math.lcm(vec[0].denominator, vec[1].denominator)
            ivec = (int(vec[0] * den), int(vec[1] * den))
            add(e.start, ivec, e.weight)
            add(e.end, (-ivec[0], -ivec[1]), e.weight)
    return {v: (s[0], s[1]) for v, s in sums.items()}


class PuiseuxScalar:
    """Finite Puiseux sum ``sum c_k t^e_k`` with rational exponents.

    Only what valuations need: addition, negation, multiplication.  Coefficients
    may be any exact numbers (ints, Fractions, complex rationals as complex).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Fraction, object] = {}
        for e, c in terms:
            e = Fraction(e)
            acc[e] = acc.get(e, 0) + c
        self.terms = tuple((e, c) for e, c in sorted(acc.items()) if c != 0)

    @classmethod
    def monomial(cls, coef, exp) -> "PuiseuxScalar":
        return cls([(exp, coef)])

    def __add__(self, other):
        other = _as_puiseux(other)
        return PuiseuxScalar(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxScalar([(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-_as_puiseux(other))

    def __mul__(self, other):
        other = _as_puiseux(other)
        return PuiseuxScalar([(e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PuiseuxScalar) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return f"PuiseuxScalar({list(self.terms)!r})"


def _as_puiseux(obj) -> PuiseuxScalar:
    if isinstance(obj, PuiseuxScalar):
        return obj
    return PuiseuxScalar([(0, obj)])


def val(a: PuiseuxScalar) -> TropScalar:
    """Smallest exponent present, ``-inf`` for zero."""
    a = _as_puiseux(a)
    return a.terms[0][0] if a.terms else NEG_INF


class PuiseuxBiPoly:
    """Polynomial in ``x, y`` with Puiseux coefficients, ``{(i, j): PuiseuxScalar}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping):
        clean = {}
        for (i, j), c in terms.items():
            c = _as_puiseux(c)
            if c.terms:
                clean[(int(i), int(j))] = c
        self.terms = clean

    def __call__(self, x, y) -> PuiseuxScalar:
        x, y = _as_puiseux(x), _as_puiseux(y)
        total = PuiseuxScalar()
        for (i, j), c in self.terms.items():
            term = c
            for _ in range(i):
                term = term * x
            for _ in range(j):
                term = term * y
            total = total + term
        return total


def tropicalize(F: PuiseuxBiPoly) -> TropBiPoly:
    """Max-plus tropicalization: coefficient ``-val(a_ij)`` on ``x^i y^j``."""
    if not F.terms:
        raise ZeroPolynomial("cannot tropicalize the zero polynomial")
    return TropBiPoly({ij: -val(c) for ij, c in F.terms.items()})


def Val(x: PuiseuxScalar, y: PuiseuxScalar) -> tuple[TropScalar, TropScalar]:
    """Image ``(-val(x), -val(y))`` of a point with nonzero Puiseux coordinates."""
    vx, vy = val(x), val(y)
    return (-vx if vx is not NEG_INF else NEG_INF, -vy if vy is not NEG_INF else NEG_INF)


def amoeba_sample(F: Mapping, t: float, n: int, seed: int, window: float = 3.0) -> list[tuple[float, float]]:
    """Points of the image of ``{F = 0}`` under ``(x, y) -> (-log_t|x|, -log_t|y|)``.

    ``F`` maps ``(i, j)`` to numeric coefficients.  ``n`` values of ``x`` are
    drawn with ``-log_t|x|`` uniform on ``[-window, window]`` and a uniform
    argument; each is paired with every root ``y`` of ``F(x, .)``.
    """
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    if n <= 0:
        raise ValueError("sample count must be positive")
    rng = np.random.default_rng(seed)
    u = rng.uniform(-window, window, n)
    theta = rng.uniform(0.0, 2.0 * np.pi, n)
    return amoeba_points(F, t ** (-u) * np.exp(1j * theta), t)


def amoeba_points(F: Mapping, xs, t: float) -> list[tuple[float, float]]:
    """Map every solution ``(x, y)`` of ``F = 0`` over the given ``x`` values; zero coordinates are skipped."""
    deg_y = max((j for (i, j), c in F.items() if c != 0), default=0)
    if deg_y == 0:
        raise DegenerateInY("polynomial does not involve y")
    log_t = math.log(t)
    out = []
    for x in xs:
        x = complex(x)
        if abs(x) == 0:
            continue
        coeffs = np.zeros(deg_y + 1, dtype=complex)
        for (i, j), c in F.items():
            coeffs[deg_y - j] += complex(c) * x ** i
        nz = np.flatnonzero(coeffs)
        if nz.size == 0:
            continue
        for y in np.roots(coeffs[nz[0]:]):
            if abs(y) < 1e-12 * max(1.0, abs(x)):
                continue
            out.append((-math.log(abs(x)) / log_t, -math.log(abs(y)) / log_t))
    return out


def _dist_point_cell(p, e: Edge) -> float:
    px, py = p
    sx, sy = float(e.start[0]), float(e.start[1])
    if e.kind == "segment":
        dx, dy = float(e.end[0]) - sx, float(e.end[1]) - sy
        lo, hi = 0.0, 1.0
    else:
        dx, dy = float(e.direction[0]), float(e.direction[1])
        lo, hi = (0.0, math.inf) if e.kind == "ray" else (-math.inf, math.inf)
    s = ((px - sx) * dx + (py - sy) * dy) / (dx * dx + dy * dy)
    s = min(max(s, lo), hi)
    return math.hypot(px - (sx + s * dx), py - (sy + s * dy))


def distance_to_curve(p, curve: TropCurve) -> float:
    if not curve.edges:
        raise EmptyCurve("curve has no cells")
    p = (float(p[0]), float(p[1]))
    return min(_dist_point_cell(p, e) for e in curve.edges)
