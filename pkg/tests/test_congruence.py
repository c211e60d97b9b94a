from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

import oracles
from geomkit.congruence import (angle_congruent, angle_less, angle_shape, lay_off,
                                seg_congruent, seg_less, segment_sum, sum_sqrt_exceeds,
                                triangle_congruence, triangle_order_checks)
from geomkit.numeric import QuadraticValue
from geomkit.space import Angle, DegenerateError, Plane, Point, Ray, Segment, collinear
from geomkit.transforms import reflect_plane

coord = st.fractions(min_value=-8, max_value=8, max_denominator=5)
points = st.builds(Point, coord, coord, coord)
inner = st.fractions(min_value=0, max_value=1, max_denominator=12).filter(lambda t: 0 < t < 1)

O = Point(0, 0, 0)


def P2(x, y):
    return Point(x, y, 0)


def test_segment_examples():
    assert seg_congruent(Segment(O, P2(1, 0)), Segment(P2(5, 5), P2(5, 6)))
    assert seg_less(Segment(O, P2(1, 0)), Segment(O, P2(2, 0)))
    assert not seg_less(Segment(O, P2(2, 0)), Segment(O, P2(1, 0)))
    with pytest.raises(DegenerateError):
        seg_congruent(Segment(O, O), Segment(O, P2(1, 0)))


@given(points, points, inner, inner)
def test_interior_subsegment_is_smaller(A, B, s, t):
    assume(A != B and s != t)
    C = A + tuple(s * d for d in (B - A))
    D = A + tuple(t * d for d in (B - A))
    assert seg_less(Segment(C, D), Segment(A, B))


def test_lay_off_exact():
    res = lay_off(Segment(P2(7, 7), P2(7, 9)), Ray(O, P2(1, 0)))
    assert res.exact and res.point == P2(2, 0)


def test_lay_off_diagonal_is_certified():
    res = lay_off(Segment(O, P2(1, 1)), Ray(O, P2(1, 0)), 20)
    assert not res.exact
    assert res.defect < Fraction(1, 2 ** 20)
    lo, hi = oracles.mp(res.param.lo.value), oracles.mp(res.param.hi.value)
    assert lo <= mpmath.sqrt(2) <= hi and hi - lo <= mpmath.mpf(2) ** -20
    assert abs(oracles.mp(res.point.x) - mpmath.sqrt(2)) < mpmath.mpf(2) ** -20


def test_lay_off_repeat_calls_agree():
    s1, s2 = Segment(O, P2(1, 1)), Segment(P2(3, 3), P2(4, 2))
    r = Ray(P2(1, 1), P2(2, 3))
    a, b = lay_off(s1, r, 30), lay_off(s2, r, 30)
    assert a.point == b.point and a.param.overlaps(b.param)


def test_segment_sum_representative():
    total, laid = segment_sum(Segment(O, P2(3, 0)), Segment(P2(0, 1), P2(0, 3)))
    assert laid.exact and total == Segment(O, P2(5, 0))


def test_angle_examples():
    right1 = Angle.at(P2(1, 0), O, P2(0, 1))
    right2 = Angle.at(Point(0, 0, 5), Point(1, 1, 1), Point(2, 0, 1))
    assert angle_shape(right2).kind == "right"
    assert angle_congruent(right1, right2)
    corner = Angle.at(P2(1, 0), O, P2(1, 1))
    mirror = Angle.at(P2(1, 1), O, P2(0, 1))
    assert angle_shape(corner).cos == QuadraticValue(0, Fraction(1, 2))
    assert angle_congruent(corner, mirror)
    sixty = Angle.at(Point(0, 1, 0), Point(1, 0, 0), Point(0, 0, 1))
    assert angle_less(sixty, right1)


def test_triangle_correspondence():
    t = (O, P2(3, 0), P2(0, 4))
    assert triangle_congruence(t, t) == (0, 1, 2)
    z = reflect_plane(Plane(Point(1, 2, 3), (1, 1, 0)))
    mirror = tuple(z.apply(X) for X in t)
    assert triangle_congruence(t, mirror) is not None
    assert triangle_congruence(t, (O, P2(3, 0), P2(0, 5))) is None


@given(points, points, points, st.permutations([0, 1, 2]))
def test_sss_shortcut_agrees_with_full_check(A, B, C, perm):
    assume(not collinear(A, B, C))
    t = (A, B, C)
    u = tuple(t[i] for i in perm)
    assert (triangle_congruence(t, u, full=False) is None) == (triangle_congruence(t, u) is None)


def test_order_checks_right_triangle():
    assert all(triangle_order_checks((O, P2(4, 0), P2(0, 3))).values())


def test_equilateral_all_acute():
    t = (Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1))
    angles = [Angle.at(t[1], t[0], t[2]), Angle.at(t[0], t[1], t[2]), Angle.at(t[0], t[2], t[1])]
    assert all(angle_shape(a).kind == "acute" for a in angles)
    assert all(angle_shape(a).cos == Fraction(1, 2) for a in angles)


@given(points, points, points)
def test_order_checks_on_random_triangles(A, B, C):
    assume(not collinear(A, B, C))
    assert triangle_order_checks((A, B, C)) == {
        "exterior-angle": True, "side-angle-order": True,
        "triangle-inequality": True, "two-acute": True}


@given(points, points)
def test_isosceles_base_angles(A, B):
    assume(A != B)
    M = Segment(A, B).midpoint()
    n = (B - A)
    w = (n[1], -n[0], 0) if (n[0], n[1]) != (0, 0) else (1, 0, 0)
    C = M + w
    assert angle_congruent(Angle.at(B, A, C), Angle.at(A, B, C))


@given(st.fractions(min_value=0, max_value=30, max_denominator=9).filter(bool),
       st.fractions(min_value=0, max_value=30, max_denominator=9).filter(bool),
       st.fractions(min_value=0, max_value=120, max_denominator=9))
def test_sum_sqrt_certificate_matches_high_precision(a2, b2, c2):
    got, tag = sum_sqrt_exceeds(a2, b2, c2)
    ref = mpmath.sqrt(oracles.mp(a2)) + mpmath.sqrt(oracles.mp(b2)) - mpmath.sqrt(oracles.mp(c2))
    if tag == "equal":
        assert abs(ref) < mpmath.mpf(2) ** -300
    else:
        assert got == (ref > 0)


def test_sum_sqrt_equality_pretest():
    assert sum_sqrt_exceeds(Fraction(1), Fraction(4), Fraction(9)) == (False, "equal")
