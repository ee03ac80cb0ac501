import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_eval, slope_change
from tropcalc.core import NEG_INF
from tropcalc.errors import (
    EmptyInterval,
    InvalidPrescription,
    NonIntegerExponent,
    NotRational,
    OverlappingPrescription,
)
from tropcalc.plfn import (
    FunctionClass,
    PLFunction,
    Prescription,
    as_rational,
    classify,
    constant_pl,
    eval_pl,
    extrema_on_interval,
    from_prescription,
    is_entire_and_bounded,
    omega,
    pl_arith,
    poly_coeffs_from_roots,
    quotient,
    roots_and_poles,
    shift_equivalent,
    tadd,
    tdiv,
    tmul,
    to_plfunction,
)
from tropcalc.poly import Factorization, TropPoly, eval_poly, expand

ABS = PLFunction(F(-1), (F(-1), F(1)), ((F(0), F(2)),))
FIG1 = TropPoly({2: 0, 1: 2, 0: 3})
PREZEROS = TropPoly({3: 0, 2: 3, 1: 5, 0: 6})
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def pl_functions(draw, max_breaks=6, entire=False):
    xs = draw(st.lists(rationals, max_size=max_breaks, unique=True))
    if entire:
        ws = [draw(st.integers(1, 4)) for _ in xs]
        left = draw(st.integers(0, 3))
    else:
        ws = [draw(st.integers(-4, 4).filter(bool)) for _ in xs]
        left = draw(st.integers(-3, 3))
    anchor = (draw(rationals), draw(rationals))
    return PLFunction(left, anchor, tuple(zip(xs, ws)))


class TestPLFunction:
    def test_anchor_normalised(self):
        same = PLFunction(-1, (5, 5), ((0, 2),))
        assert same == ABS
        assert ABS.anchor == (-1, 1)

    def test_merge_and_drop(self):
        f = PLFunction(0, (0, 0), ((1, 2), (1, -2), (3, 1)))
        assert f.breaks == ((3, 1),)

    def test_integer_slopes_required(self):
        with pytest.raises(NonIntegerExponent):
            PLFunction(F(1, 2), (0, 0), ())
        assert PLFunction(F(1, 2), (0, 0), (), extended=True).right_slope == F(1, 2)


class TestEval:
    @pytest.mark.parametrize("x, expected", [(2, 2), (0, 0), (-3, 3), (F(-1, 2), F(1, 2))])
    def test_abs(self, x, expected):
        assert eval_pl(ABS, x) == expected

    def test_from_poly(self):
        assert eval_pl(to_plfunction(FIG1), 4) == 8

    @settings(max_examples=60)
    @given(st.dictionaries(st.integers(0, 8), rationals, min_size=1), rationals)
    def test_matches_polynomial(self, terms, x):
        assert eval_pl(to_plfunction(TropPoly(terms)), x) == brute_eval(terms, x)


class TestOmega:
    def test_examples(self):
        assert omega(ABS, 0) == 2
        assert omega(to_plfunction(FIG1), 1) == 1
        assert omega(ABS, 5) == 0

    @settings(max_examples=60)
    @given(pl_functions())
    def test_matches_finite_difference(self, f):
        for x, w in f.breaks:
            assert slope_change(f, x, F(1, 10**9)) == w == omega(f, x)


class TestRootsAndPoles:
    def test_examples(self):
        assert roots_and_poles(ABS) == ([(0, 2)], [], ("pole", 1))
        assert roots_and_poles(to_plfunction(PREZEROS)) == ([(1, 1), (2, 1), (3, 1)], [], ("ordinary", 0))
        assert roots_and_poles(constant_pl(5)) == ([], [], ("ordinary", 0))
        assert roots_and_poles(to_plfunction(TropPoly({2: 0})))[2] == ("root", 2)

    @settings(max_examples=60)
    @given(st.dictionaries(st.integers(0, 8), rationals, min_size=1))
    def test_polynomials_are_entire(self, terms):
        f = to_plfunction(TropPoly(terms))
        assert all(w > 0 for _, w in f.breaks)
        assert f.left_slope == min(terms) >= 0


class TestClassify:
    def test_examples(self):
        assert classify(ABS) is FunctionClass.RATIONAL
        assert classify(to_plfunction(FIG1)) is FunctionClass.POLYNOMIAL
        half = PLFunction(0, (0, 0), ((1, F(1, 2)),), extended=True)
        assert classify(half) is FunctionClass.UNREPRESENTABLE


class TestPrescription:
    def test_prezeros(self):
        f = from_prescription(Prescription(roots=((1, 1), (2, 1), (3, 1)), K=0))
        assert f == to_plfunction(PREZEROS)

    def test_abs(self):
        f = from_prescription(Prescription(roots=((0, 2),), poles=((NEG_INF, 1),), anchor=(-1, 1)))
        assert f == ABS

    def test_constant(self):
        assert from_prescription(Prescription(K=5)) == constant_pl(5)

    def test_errors(self):
        with pytest.raises(OverlappingPrescription):
            Prescription(roots=((1, 1),), poles=((1, 2),))
        with pytest.raises(InvalidPrescription):
            Prescription(roots=((NEG_INF, 1),), poles=((NEG_INF, 2),))
        with pytest.raises(InvalidPrescription):
            Prescription(roots=((1, 0),))
        with pytest.raises(InvalidPrescription):
            Prescription(K=1, anchor=(0, 0))

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(200):
            locs = rng.sample(range(-40, 40), rng.randint(0, 8))
            entries = [(F(x, 4), rng.randint(1, 4)) for x in locs]
            cut = rng.randint(0, len(entries))
            roots, poles = entries[:cut], entries[cut:]
            if rng.random() < 0.5:
                (roots if rng.random() < 0.5 else poles).append((NEG_INF, rng.randint(1, 4)))
            p = Prescription(roots=tuple(roots), poles=tuple(poles), K=F(rng.randint(-9, 9), 2))
            f = from_prescription(p)
            rts, pls, (kind, m) = roots_and_poles(f)
            exp_r = sorted(e for e in roots if e[0] is not NEG_INF)
            exp_p = sorted(e for e in poles if e[0] is not NEG_INF)
            assert (rts, pls) == (exp_r, exp_p)
            neg = [("root", mm) for x, mm in roots if x is NEG_INF] + [("pole", mm) for x, mm in poles if x is NEG_INF]
            assert (kind, m) == (neg[0] if neg else ("ordinary", 0))

    def test_K_is_the_rational_constant(self):
        p = Prescription(roots=((0, 1),), poles=((1, 1),), K=1)
        g, h, K = as_rational(from_prescription(p))
        assert K == 1


class TestPolyFromRoots:
    def test_examples(self):
        assert poly_coeffs_from_roots([1, 2, 3]) == PREZEROS
        assert poly_coeffs_from_roots([2, 1]) == FIG1
        assert poly_coeffs_from_roots([]) == TropPoly({0: 0})

    @settings(max_examples=60)
    @given(st.lists(rationals, max_size=8))
    def test_agrees_with_expand(self, rts):
        assert poly_coeffs_from_roots(rts) == expand(Factorization(0, 0, tuple(rts)))


class TestQuotient:
    def test_abs(self):
        assert quotient(TropPoly({1: 0, 0: 0}) ** 2, TropPoly({1: 0})) == ABS

    def test_self(self):
        assert quotient(FIG1, FIG1) == constant_pl(0)

    def test_cancellation(self):
        q = quotient(FIG1, TropPoly({1: 0, 0: 1}))
        assert q == to_plfunction(TropPoly({1: 0, 0: 2}))
        for k in range(-40, 41):
            x = F(k, 8)
            assert eval_pl(q, x) == brute_eval(FIG1.terms, x) - brute_eval({1: 0, 0: 1}, x)


class TestAsRational:
    def test_abs(self):
        g, h, K = as_rational(ABS)
        assert (g, h, K) == (TropPoly({2: 0, 1: 0, 0: 0}), TropPoly({1: 0}), 0)

    def test_polynomial(self):
        g, h, K = as_rational(to_plfunction(FIG1))
        assert (g, h, K) == (FIG1, TropPoly({0: 0}), 0)

    def test_root_and_pole(self):
        f = PLFunction(0, (-1, 0), ((0, 1), (1, -1)))
        g, h, K = as_rational(f)
        assert (g, h, K) == (TropPoly({1: 0, 0: 0}), TropPoly({1: 0, 0: 1}), 1)
        for k in range(-30, 30):
            x = F(k, 5)
            assert eval_pl(f, x) == K + eval_poly(g, x) - eval_poly(h, x)

    def test_not_rational(self):
        with pytest.raises(NotRational):
            as_rational(PLFunction(0, (0, 0), ((1, F(1, 2)),), extended=True))

    @settings(max_examples=60)
    @given(pl_functions())
    def test_inverse_of_quotient(self, f):
        g, h, K = as_rational(f)
        assert tmul(quotient(g, h), constant_pl(K)) == f


class TestArith:
    def test_shift_by_constant(self):
        f = to_plfunction(PREZEROS)
        g = tmul(f, constant_pl(2))
        assert roots_and_poles(g) == roots_and_poles(f)
        for k in range(-20, 60):
            assert eval_pl(g, F(k, 10)) == eval_pl(f, F(k, 10)) + 2

    def test_identities(self):
        f = ABS
        assert tadd(f, f) == f
        assert tdiv(f, f) == constant_pl(0)

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            pl_arith(ABS, ABS, "tsub")

    @settings(max_examples=80)
    @given(pl_functions(), pl_functions())
    def test_pointwise(self, f, g):
        rng = random.Random(0)
        pts = [F(rng.randint(-3000, 3000), 97) for _ in range(100)]
        pts += [x for x, _ in f.breaks + g.breaks]
        s, p, q = tadd(f, g), tmul(f, g), tdiv(f, g)
        for x in pts:
            assert eval_pl(s, x) == max(eval_pl(f, x), eval_pl(g, x))
            assert eval_pl(p, x) == eval_pl(f, x) + eval_pl(g, x)
            assert eval_pl(q, x) == eval_pl(f, x) - eval_pl(g, x)
        assert set(s.positions) <= set(f.positions) | set(g.positions) | _crossings_brute(f, g)


def _crossings_brute(f, g):
    """Every point where f - g vanishes inside a piece, found piece by piece."""
    xs = sorted(set(f.positions) | set(g.positions))
    out = set()
    edges = [None] + xs + [None]
    for a, b in zip(edges, edges[1:]):
        lo = a if a is not None else (b - 1 if b is not None else F(0))
        hi = b if b is not None else lo + 1
        mid = (lo + hi) / 2
        d = lambda x: eval_pl(f, x) - eval_pl(g, x)  # noqa: E731
        slope = (d(hi) - d(lo)) / (hi - lo)
        if slope:
            out.add(mid - d(mid) / slope)
    return out


class TestShiftEquivalent:
    def test_examples(self):
        f = to_plfunction(PREZEROS)
        xf = to_plfunction(PREZEROS * TropPoly({1: 0}))
        assert shift_equivalent(xf, f) == (1, 0)
        assert shift_equivalent(f, f) == (0, 0)
        assert shift_equivalent(ABS, to_plfunction(FIG1)) is None

    @settings(max_examples=40)
    @given(pl_functions(), st.integers(-3, 3), rationals)
    def test_affine_shift(self, f, m, b):
        g = PLFunction(f.left_slope + m, (f.anchor[0], f.anchor[1] + m * f.anchor[0] + b), f.breaks)
        assert shift_equivalent(g, f) == (m, b)


class TestPredicates:
    def test_examples(self):
        assert is_entire_and_bounded(constant_pl(5)) == (True, True)
        assert is_entire_and_bounded(to_plfunction(TropPoly({1: 0, 0: 0}))) == (True, False)
        assert is_entire_and_bounded(ABS) == (False, False)

    def test_extrema_examples(self):
        assert extrema_on_interval(to_plfunction(FIG1), 0, 4) == (3, 8)
        assert extrema_on_interval(constant_pl(5), -1, 1) == (5, 5)
        assert extrema_on_interval(ABS, -2, 1) == (0, 2)
        with pytest.raises(EmptyInterval):
            extrema_on_interval(ABS, 1, 0)

    @settings(max_examples=80)
    @given(pl_functions(entire=True))
    def test_liouville(self, f):
        entire, bounded = is_entire_and_bounded(f)
        assert entire
        if bounded:
            assert f.breaks == () and f.left_slope == 0

    @settings(max_examples=80)
    @given(pl_functions(entire=True), rationals, rationals)
    def test_maximum_modulus(self, f, a, b):
        a, b = min(a, b), max(a, b)
        assert extrema_on_interval(f, a, b) == (eval_pl(f, a), eval_pl(f, b))

    @settings(max_examples=60)
    @given(pl_functions(), rationals, rationals)
    def test_extrema_brute(self, f, a, b):
        a, b = min(a, b), max(a, b)
        grid = [a + (b - a) * k / 50 for k in range(51)] + [x for x in f.positions if a <= x <= b]
        vals = [eval_pl(f, x) for x in grid]
        assert extrema_on_interval(f, a, b) == (min(vals), max(vals))


class TestUniqueness:
    @settings(max_examples=40)
    @given(pl_functions(), rationals)
    def test_constant_multiples(self, f, k):
        roots, poles, (kind, m) = roots_and_poles(f)
        if kind == "root":
            roots = roots + [(NEG_INF, m)]
        elif kind == "pole":
            poles = poles + [(NEG_INF, m)]
        f1 = from_prescription(Prescription(tuple(roots), tuple(poles), K=0))
        f2 = from_prescription(Prescription(tuple(roots), tuple(poles), K=k))
        diffs = {eval_pl(f2, F(x, 3)) - eval_pl(f1, F(x, 3)) for x in range(-60, 61)}
        assert diffs == {k}
