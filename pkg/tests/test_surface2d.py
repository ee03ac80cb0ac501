import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tropcalc.core import NEG_INF
from tropcalc.errors import DegenerateInY, EmptyCurve
from tropcalc.surface2d import (
    PuiseuxBiPoly,
    PuiseuxScalar,
    TropBiPoly,
    Val,
    achieving_terms,
    amoeba_points,
    amoeba_sample,
    balancing,
    distance_to_curve,
    eval2,
    on_curve,
    tropical_curve,
    tropicalize,
    val,
)

LINE = TropBiPoly({(1, 0): 0, (0, 1): 0, (0, 0): 0})
P = PuiseuxScalar.monomial


@st.composite
def bipolys(draw):
    keys = draw(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6, unique=True))
    coefs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return TropBiPoly({k: draw(coefs) for k in keys})


def cell_samples(edge):
    if edge.kind == "segment":
        return [edge.point_at(F(k, 8)) for k in range(9)]
    params = [F(k, 2) for k in range(0, 20)]
    if edge.kind == "line":
        params += [-s for s in params]
    return [edge.point_at(s) for s in params]


class TestEval:
    @pytest.mark.parametrize("p, expected", [((0, 0), 0), ((2, 1), 2), ((-5, -5), 0)])
    def test_line(self, p, expected):
        assert eval2(LINE, *p) == expected

    def test_neg_inf(self):
        assert eval2(LINE, NEG_INF, NEG_INF) == 0
        assert eval2(TropBiPoly({(1, 1): 0}), NEG_INF, 3) is NEG_INF


class TestOnCurve:
    @pytest.mark.parametrize("p, expected", [((0, 0), True), ((1, 1), True), ((2, 1), False)])
    def test_line(self, p, expected):
        assert on_curve(LINE, p) is expected

    def test_achieving_terms(self):
        assert achieving_terms(LINE, (0, 0)) == [(0, 0), (0, 1), (1, 0)]


class TestCurve:
    def test_tropical_line(self):
        c = tropical_curve(LINE)
        assert c.vertices == ((0, 0),)
        assert {(e.kind, e.start, e.direction, e.weight) for e in c.edges} == {
            ("ray", (0, 0), (1, 1), 1),
            ("ray", (0, 0), (-1, 0), 1),
            ("ray", (0, 0), (0, -1), 1),
        }
        assert all(isinstance(v, F) for v in c.vertices[0])

    def test_shifted_line(self):
        c = tropical_curve(TropBiPoly({(1, 0): 0, (0, 1): 0, (0, 0): 1}))
        assert c.vertices == ((1, 1),)
        assert sorted(e.direction for e in c.edges) == [(-1, 0), (0, -1), (1, 1)]
        for e in c.edges:
            assert all(on_curve(TropBiPoly({(1, 0): 0, (0, 1): 0, (0, 0): 1}), p) for p in cell_samples(e))

    def test_single_term(self):
        c = tropical_curve(TropBiPoly({(1, 0): 3}))
        assert not c and c.vertices == ()

    def test_whole_line_and_weight(self):
        c = tropical_curve(TropBiPoly({(2, 0): 0, (1, 0): 0, (0, 0): 0}))
        assert len(c.edges) == 1
        (e,) = c.edges
        assert (e.kind, e.start, e.direction, e.weight) == ("line", (0, 0), (0, 1), 2)
        assert e.terms == ((0, 0), (1, 0), (2, 0))

    def test_conic_segment(self):
        # x^2 + xy + y^2 + x + y + 0 with generic coefficients has bounded edges
        f = TropBiPoly({(2, 0): 0, (1, 1): 1, (0, 2): 0, (1, 0): 1, (0, 1): 1, (0, 0): 0})
        c = tropical_curve(f)
        assert any(e.kind == "segment" for e in c.edges)
        assert all(s == (0, 0) for s in balancing(c).values())

    @settings(max_examples=60, deadline=None)
    @given(bipolys())
    def test_membership_and_balancing(self, f):
        c = tropical_curve(f)
        for e in c.edges:
            assert e.direction is None or math.gcd(*e.direction) == 1
            for p in cell_samples(e):
                assert on_curve(f, p)
        assert all(s == (0, 0) for s in balancing(c).values())

    @settings(max_examples=60, deadline=None)
    @given(bipolys(), st.data())
    def test_off_curve_points_rejected(self, f, data):
        c = tropical_curve(f)
        p = (data.draw(st.fractions(-6, 6, max_denominator=7)), data.draw(st.fractions(-6, 6, max_denominator=7)))
        if not on_curve(f, p):
            assert not c or distance_to_curve(p, c) > 0
        else:
            assert distance_to_curve(p, c) < 1e-9


class TestPuiseux:
    def test_val(self):
        assert val(P(1, 1) + P(3, 2)) == 1
        assert val(P(1, 0)) == 0
        assert val(PuiseuxScalar()) is NEG_INF

    def test_arithmetic(self):
        x = P(2, F(1, 2)) + P(1, 1)
        assert (x - x).terms == ()
        assert (x * x).terms == ((1, 4), (F(3, 2), 4), (2, 1))

    def test_tropicalize_examples(self):
        assert tropicalize(PuiseuxBiPoly({(1, 0): 1, (0, 1): 1, (0, 0): 1})) == LINE
        F2 = PuiseuxBiPoly({(1, 0): P(1, 1), (0, 1): 1, (0, 0): P(1, 2)})
        assert tropicalize(F2) == TropBiPoly({(1, 0): -1, (0, 1): 0, (0, 0): -2})
        single = tropicalize(PuiseuxBiPoly({(2, 0): 5}))
        assert single == TropBiPoly({(2, 0): 0}) and not tropical_curve(single)

    def test_zero_terms_omitted(self):
        F1 = PuiseuxBiPoly({(1, 0): 1, (0, 1): PuiseuxScalar(), (0, 0): 1})
        assert tropicalize(F1) == TropBiPoly({(1, 0): 0, (0, 0): 0})

    @pytest.mark.parametrize("s", [F(k, 2) for k in range(-6, 7)])
    def test_kapranov_second_line(self, s):
        # y = -t x - t^2 for val(x) = s lands at (-s, -min(1 + s, 2))
        F2 = PuiseuxBiPoly({(1, 0): P(1, 1), (0, 1): 1, (0, 0): P(1, 2)})
        curve_poly = tropicalize(F2)
        x = P(3, s) + P(-2, s + 1)
        y = -(P(1, 1) * x) - P(1, 2)
        assert F2(x, y).terms == ()
        point = Val(x, y)
        assert point == (-s, -min(1 + s, 2))
        assert on_curve(curve_poly, point)


class TestAmoeba:
    def test_deterministic(self):
        F1 = {(1, 0): 1, (0, 1): 1, (0, 0): 1}
        assert amoeba_sample(F1, 0.3, 50, 4) == amoeba_sample(F1, 0.3, 50, 4)
        assert amoeba_sample(F1, 0.3, 50, 4) != amoeba_sample(F1, 0.3, 50, 5)

    def test_zero_y_skipped(self):
        F1 = {(1, 0): 1, (0, 1): 1, (0, 0): 1}
        assert amoeba_points(F1, [-1], 0.4) == []
        assert len(amoeba_points(F1, [-1, 2], 0.4)) == 1

    def test_degenerate(self):
        with pytest.raises(DegenerateInY):
            amoeba_sample({(1, 0): 1, (0, 0): 1}, 0.5, 10, 0)

    def test_points_satisfy_equation(self):
        t = 0.2
        for X, Y in amoeba_sample({(1, 0): 1, (0, 1): 1, (0, 0): 1}, t, 40, 1):
            # |x| = t^-X, |y| = t^-Y must satisfy the triangle inequalities of x + y + 1 = 0
            ax, ay = t ** -X, t ** -Y
            assert abs(ax - ay) <= 1 + 1e-9 and ax + ay >= 1 - 1e-9

    def test_convergence(self):
        c = tropical_curve(LINE)
        F1 = {(1, 0): 1, (0, 1): 1, (0, 0): 1}
        means = []
        for t in (0.4, 0.2, 0.1, 0.05, 0.01):
            pts = amoeba_sample(F1, t, 500, 0)
            means.append(sum(distance_to_curve(p, c) for p in pts) / len(pts))
        assert all(a > b for a, b in zip(means, means[1:]))


class TestDistance:
    def _dense(self, p, curve):
        best = math.inf
        for e in curve.edges:
            for k in range(0, 4001):
                q = e.point_at(F(k, 400))
                best = min(best, math.hypot(p[0] - q[0], p[1] - q[1]))
        return best

    def test_examples(self):
        c = tropical_curve(LINE)
        assert distance_to_curve((0, 0), c) == 0
        assert distance_to_curve((1, 0), c) == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
        assert distance_to_curve((-3, -4), c) == pytest.approx(3, abs=1e-12)

    @pytest.mark.parametrize("p", [(1, 0), (-3, -4), (2, -7), (-1, 3)])
    def test_dense_sampling_oracle(self, p):
        c = tropical_curve(LINE)
        assert distance_to_curve(p, c) == pytest.approx(self._dense(p, c), abs=2e-3)

    def test_empty(self):
        with pytest.raises(EmptyCurve):
            distance_to_curve((0, 0), tropical_curve(TropBiPoly({(0, 0): 1})))
