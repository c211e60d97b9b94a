from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from geomkit import linalg as la
from geomkit.space import Line, Plane, Point, between, collinear, line_through
from geomkit.transforms import (Isometry, NotExactError, classify_about, compose, conjugate,
                                decompose, fixed_set, homothety, identity, image_plane,
                                inversion, invert, parity, project_line, project_plane,
                                reflect_line, reflect_plane, rotation, rotation_enclosure,
                                sim_apply, sim_compose, translation, word_parity)
from geomkit.numeric import compare

coord = st.fractions(min_value=-6, max_value=6, max_denominator=4)
points = st.builds(Point, coord, coord, coord)
normals = st.tuples(coord, coord, coord).filter(lambda v: any(v))
planes = st.builds(Plane, points, normals)
words = st.lists(planes, max_size=5).map(Isometry.from_word)

O = Point(0, 0, 0)
ZAXIS = Line(O, (0, 0, 1))
Z0 = Plane(O, (0, 0, 1))


def test_reflect_plane_examples():
    z = reflect_plane(Z0)
    assert z.apply(Point(1, 2, 3)) == Point(1, 2, -3)
    zz = compose(z, z)
    assert zz.word == () and zz.is_identity
    assert fixed_set(z) == Z0


@given(planes, points)
def test_reflection_fixes_exactly_its_plane(p, X):
    z = reflect_plane(p)
    assert (z.apply(X) == X) == p.contains(X)


def test_line_reflection_and_inversion():
    assert reflect_line(Line(O, (1, 0, 0))).apply(Point(1, 2, 3)) == Point(1, -2, -3)
    assert inversion(O).apply(Point(1, 2, 3)) == Point(-1, -2, -3)
    assert inversion(Point(1, 0, 0)).apply(Point(3, 1, 0)) == Point(-1, -1, 0)


@given(points, normals)
def test_line_reflection_times_plane_reflection_is_inversion(P, n):
    a, alpha = Line(P, n), Plane(P, n)
    assert compose(reflect_line(a), reflect_plane(alpha)) == inversion(P)
    assert compose(reflect_plane(alpha), reflect_line(a)) == inversion(P)


def test_quarter_turn():
    q = rotation(ZAXIS, Point(1, 0, 0), Point(0, 1, 0))
    assert q.apply(Point(1, 0, 0)) == Point(0, 1, 0)
    assert rotation(ZAXIS, Point(1, 0, 0), Point(5, 0, 2)).is_identity


def test_rotation_composition_law_pythagorean():
    H, K, L = Point(1, 0, 0), Point(3, 4, 0), Point(-5, 12, 0)
    assert compose(rotation(ZAXIS, K, L), rotation(ZAXIS, H, K)) == rotation(ZAXIS, H, L)


def test_irrational_bisector_needs_enclosure():
    with pytest.raises(NotExactError):
        rotation(ZAXIS, Point(1, 0, 0), Point(1, 1, 0))
    exact, enc = rotation_enclosure(ZAXIS, Point(1, 0, 0), Point(1, 1, 0), 20)
    # 45 degree rotation: first column is (cos, sin, 0) = (1/sqrt2, 1/sqrt2, 0)
    assert compare(exact[0][0], exact[1][0]) == 0
    assert exact[2][2] == 1
    assert enc[0][0].width <= Fraction(1, 2 ** 20)


def test_translation_examples():
    assert translation((0, 0, 0)).is_identity
    assert translation((1, 2, 3)).apply(O) == Point(1, 2, 3)
    s = compose(translation((1, 2, 3)), translation((-4, 0, 1)))
    assert s == translation((-3, 2, 4))


@given(st.tuples(coord, coord, coord), points, points)
def test_translation_displacement_is_constant(v, X, Y):
    f = translation(v)
    assert f.apply(X) - X == f.apply(Y) - Y == tuple(Fraction(c) for c in v)


@given(words, points)
def test_word_and_affine_agree(f, X):
    assert f.apply_word(X) == f.apply(X)


@given(words)
def test_matrix_is_orthogonal_with_word_parity(f):
    M = f.matrix
    assert la.matmul(la.transpose(M), M) == la.identity()
    assert parity(f) == word_parity(f)


@given(words, words, words)
def test_group_laws(f, g, h):
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)).is_identity
    assert compose(identity(), f) == f == compose(f, identity())
    assert (parity(compose(f, g)) == "even") == (parity(f) == parity(g))


def test_quarter_turns_about_crossing_axes_compose_to_a_rotation():
    qz = rotation(ZAXIS, Point(1, 0, 0), Point(0, 1, 0))
    qx = rotation(Line(O, (1, 0, 0)), Point(0, 1, 0), Point(0, 0, 1))
    f = compose(qz, qx)
    fixed = fixed_set(f)
    assert isinstance(fixed, Line) and fixed.base == O
    assert classify_about(f, O).kind == "rotation"
    # the axis direction is fixed by the matrix
    assert la.matvec(f.matrix, fixed.direction) == fixed.direction


def test_decompose_screw_motion():
    q = rotation(ZAXIS, Point(1, 0, 0), Point(0, 1, 0))
    t = translation((0, 0, 5))
    g, p, cls = decompose(compose(t, q), O)
    assert g == q and p == t and cls.kind == "rotation"
    assert cls.axis == ZAXIS
    g, p, cls = decompose(translation((1, 2, 3)))
    assert g.is_identity and cls.kind == "identity"


def test_classify_mirror():
    cls = classify_about(reflect_plane(Z0), O)
    assert cls.parity == "odd" and cls.kind == "reflection" and cls.plane == Z0


def test_conjugation_examples():
    got = conjugate(translation((0, 0, 1)), reflect_plane(Z0))
    assert got == reflect_plane(Plane(Point(0, 0, 1), (0, 0, 1)))
    q = rotation(ZAXIS, Point(1, 0, 0), Point(0, 1, 0))
    assert conjugate(q, translation((1, 0, 0))) == translation((0, 1, 0))
    g = reflect_plane(Plane(Point(1, 1, 1), (1, 2, 0)))
    assert conjugate(identity(), g) == g


@given(words, planes)
def test_conjugated_reflection_is_reflection_in_image(f, p):
    assert conjugate(f, reflect_plane(p)) == reflect_plane(image_plane(f, p))


@given(words, points, points, points)
def test_isometries_preserve_order_and_collinearity(f, A, B, C):
    assert between(A, B, C) == between(f.apply(A), f.apply(B), f.apply(C))
    assert collinear(A, B, C) == collinear(f.apply(A), f.apply(B), f.apply(C))


def test_projection_examples():
    assert project_line(Point(1, 2, 3), Line(O, (1, 0, 0))) == Point(1, 0, 0)
    assert project_plane(Point(1, 2, 3), Z0) == Point(1, 2, 0)


@given(points, planes, points)
def test_projection_idempotent_and_three_perpendiculars(X, p, B):
    Y = project_plane(X, p)
    assert p.contains(Y) and project_plane(Y, p) == Y
    A = p.base
    # c: a line in p; b: a line from a point off p meeting p at A
    c_dir = la.cross(p.normal, B - A)
    assume(not la.is_zero(c_dir))
    b_dir = X - A
    pb_dir = project_plane(X, p) - A
    assume(not la.is_zero(b_dir) and not la.is_zero(pb_dir))
    assert (la.dot(b_dir, c_dir) == 0) == (la.dot(pb_dir, c_dir) == 0)


@given(points, points, points, points)
def test_projection_on_line_keeps_betweenness(P, A, C, Q):
    assume(P != Q)
    a = line_through(P, Q)
    B = _mid(A, C)
    pa, pb, pc = (project_line(X, a) for X in (A, B, C))
    assume(pa != pc)
    assert between(pa, pb, pc)


def _mid(A, C):
    return Point(*((x + y) / 2 for x, y in zip(A, C)))


def test_homothety_examples():
    assert homothety(O, 1).apply(Point(3, 4, 5)) == Point(3, 4, 5)
    assert homothety(Point(1, 2, 3), -1) == inversion(Point(1, 2, 3))
    h = homothety(O, 2)
    assert h.apply(Point(1, 1, 0)) == Point(2, 2, 0)
    with pytest.raises(ValueError):
        homothety(O, 0)


@given(points, st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(bool), points)
def test_homothety_minus_one_is_inversion(C, k, X):
    assert sim_apply(homothety(C, -1), X) == inversion(C).apply(X)
    p, q = k, Fraction(3, 2)
    assert sim_compose(homothety(C, p), homothety(C, q)).apply(X) == homothety(C, p * q).apply(X)
