"""Congruence and comparison of segments and angles, decided exactly on
squared lengths and exact cosines."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional, Union

from . import linalg as la
from .numeric import (DEFAULT_ORDER, DyadicInterval, QuadraticValue, compare,
                      is_square, exact_sqrt, sqrt_enclose)
from .space import (Angle, DegenerateError, Point, Ray, Segment, collinear)

Triangle = tuple  # (Point, Point, Point)


def squared_length(s: Segment) -> Fraction:
    return s.length2()


def _check_segment(s: Segment) -> Fraction:
    if s.degenerate:
        raise DegenerateError(f"degenerate segment {s}")
    return s.length2()


def seg_congruent(s1: Segment, s2: Segment) -> bool:
    return _check_segment(s1) == _check_segment(s2)


def seg_less(s1: Segment, s2: Segment) -> bool:
    return _check_segment(s1) < _check_segment(s2)


# --- lay-off -----------------------------------------------------------------

@dataclass(frozen=True)
class LaidOff:
    """Result of laying a segment off on a ray.

    ``exact`` points are the true point.  Otherwise ``point`` is the dyadic
    approximation at parameter ``param.lo`` and ``defect`` bounds
    |length(origin, point) - length(s)| from above.
    """

    point: Point
    exact: bool
    param: Optional[DyadicInterval] = None
    defect: Fraction = Fraction(0)


def lay_off(s: Segment, r: Ray, m: int = DEFAULT_ORDER) -> LaidOff:
    ratio2 = _check_segment(s) / la.norm2(r.direction)
    if is_square(ratio2):
        t = exact_sqrt(ratio2)
        return LaidOff(r.origin + la.scale(t, r.direction), True)
    dir_len = sqrt_enclose(la.norm2(r.direction), 0).hi.value
    extra = max(0, int(dir_len).bit_length())
    t_iv = sqrt_enclose(ratio2, m + extra + 1)
    defect = t_iv.width * dir_len
    if defect >= Fraction(1, 1 << m):
        raise AssertionError("lay-off certificate too wide")
    point = r.origin + la.scale(t_iv.lo.value, r.direction)
    return LaidOff(point, False, t_iv, defect)


def segment_sum(s1: Segment, s2: Segment, m: int = DEFAULT_ORDER) -> tuple[Segment, LaidOff]:
    """A representative of [s1] + [s2]: s2 laid off beyond s1.B on the line
    of s1, so the sum is [s1.A, D].  The result is exact iff the lay-off is."""
    A, B = s1.A, s1.B
    _check_segment(s1)
    d = lay_off(s2, Ray(B, B + (B - A)), m)
    return Segment(A, d.point), d


# --- angles ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AngleShape:
    """Congruence class of an angle, carried by its exact cosine."""

    cos: QuadraticValue
    straight: bool = False

    def __eq__(self, other):
        if not isinstance(other, AngleShape):
            return NotImplemented
        return self.cos == other.cos

    __hash__ = None

    @property
    def kind(self) -> str:
        if self.straight:
            return "straight"
        s = self.cos.signum()
        return "acute" if s > 0 else ("right" if s == 0 else "obtuse")


def cosine(u: la.Vec, v: la.Vec) -> QuadraticValue:
    d = la.dot(u, v)
    n = la.norm2(u) * la.norm2(v)
    if n == 0:
        raise DegenerateError("zero vector in cosine")
    return QuadraticValue(Fraction(0), d * d / n, -1 if d < 0 else 1)


def angle_shape(a: Angle) -> AngleShape:
    if a.straight:
        return AngleShape(QuadraticValue(Fraction(-1)), True)
    return AngleShape(cosine(a.side1.direction, a.side2.direction))


def angle_congruent(a1: Angle, a2: Angle) -> bool:
    return angle_shape(a1) == angle_shape(a2)


def angle_less(a1: Angle, a2: Angle) -> bool:
    # cosine is strictly decreasing on (0, pi]
    return angle_shape(a1).cos > angle_shape(a2).cos


def is_right(a: Angle) -> bool:
    return angle_shape(a).kind == "right"


# --- triangles ---------------------------------------------------------------

def _check_triangle(t: Triangle) -> None:
    if len(set(t)) < 3 or collinear(*t):
        raise DegenerateError("degenerate triangle")


def triangle_angles(t: Triangle) -> tuple[Angle, Angle, Angle]:
    A, B, C = t
    return Angle.at(B, A, C), Angle.at(A, B, C), Angle.at(A, C, B)


def triangle_sides(t: Triangle) -> tuple[Fraction, Fraction, Fraction]:
    """Squared sides opposite A, B, C."""
    A, B, C = t
    return (la.norm2(C - B), la.norm2(C - A), la.norm2(B - A))


def _matches(t1: Triangle, t2: Triangle, perm, check_angles: bool) -> bool:
    u = tuple(t2[i] for i in perm)
    if triangle_sides(t1) != triangle_sides(u):
        return False
    if not check_angles:
        return True
    return all(angle_congruent(a, b) for a, b in zip(triangle_angles(t1), triangle_angles(u)))


def triangle_congruence(t1: Triangle, t2: Triangle, full: bool = True) -> Optional[tuple[int, int, int]]:
    """A vertex correspondence i -> perm[i] making the triangles congruent.

    With ``full`` all three sides and angles are compared; otherwise only
    the sides (the SSS shortcut).
    """
    _check_triangle(t1)
    _check_triangle(t2)
    for perm in permutations(range(3)):
        if _matches(t1, t2, perm, full):
            return perm
    return None


def sas_holds(t1: Triangle, t2: Triangle) -> bool:
    """Two sides and the included angle at vertex A agree."""
    (A, B, C), (P, Q, R) = t1, t2
    return (la.norm2(B - A) == la.norm2(Q - P) and la.norm2(C - A) == la.norm2(R - P)
            and angle_congruent(Angle.at(B, A, C), Angle.at(Q, P, R)))


def asa_holds(t1: Triangle, t2: Triangle) -> bool:
    """Side AB and the angles at A and B agree."""
    (A, B, C), (P, Q, R) = t1, t2
    return (la.norm2(B - A) == la.norm2(Q - P)
            and angle_congruent(Angle.at(B, A, C), Angle.at(Q, P, R))
            and angle_congruent(Angle.at(A, B, C), Angle.at(P, Q, R)))


def sum_sqrt_exceeds(a2: Fraction, b2: Fraction, c2: Fraction, order: int = 64) -> tuple[bool, str]:
    """Decide sqrt(a2) + sqrt(b2) > sqrt(c2) with a certificate tag.

    Equality is excluded exactly first; then the cross term 2*sqrt(a2*b2)
    is bounded below by a dyadic enclosure.
    """
    exact = QuadraticValue(a2 + b2 - c2, 4 * a2 * b2, 1)
    if exact.signum() == 0:
        return False, "equal"
    cross_lo = sqrt_enclose(4 * a2 * b2, order).lo.value
    if a2 + b2 + cross_lo > c2:
        return True, f"enclosure@{order}"
    return exact.signum() > 0, "exact"


def triangle_order_checks(t: Triangle) -> dict[str, bool]:
    """Evaluate the triangle ordering theorems on one triangle."""
    _check_triangle(t)
    A, B, C = t
    verts = (A, B, C)
    angles = triangle_angles(t)
    shapes = [angle_shape(a) for a in angles]
    sides = triangle_sides(t)
    out = {}

    # an interior angle is smaller than each non-adjacent exterior angle
    ok = True
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        V, P, Q = verts[i], verts[j], verts[k]
        # the two (vertical) exterior angles at V
        for ext in (Angle.at(P, V, V + (V - Q)), Angle.at(Q, V, V + (V - P))):
            ok &= angle_less(angles[j], ext) and angle_less(angles[k], ext)
    out["exterior-angle"] = ok

    # bigger side opposite bigger angle, both ways
    ok = True
    for i in range(3):
        for j in range(3):
            if i != j:
                ok &= (sides[i] > sides[j]) == (shapes[i].cos < shapes[j].cos)
    out["side-angle-order"] = ok

    ok = True
    for i in range(3):
        a2, b2, c2 = sides[(i + 1) % 3], sides[(i + 2) % 3], sides[i]
        ok &= sum_sqrt_exceeds(a2, b2, c2)[0]
    out["triangle-inequality"] = ok

    out["two-acute"] = sum(1 for s in shapes if s.kind == "acute") >= 2
    return out
