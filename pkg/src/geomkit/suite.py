"""Property suites over the analytic rational model, and the file-model
bridge to the incidence checker.

Each property draws random rational configurations from its own seeded
generator and returns ``None`` on success or a witness string.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import incidence
from . import linalg as la
from .congruence import (angle_congruent, angle_less, angle_shape, asa_holds, lay_off,
                         sas_holds, seg_congruent, seg_less, triangle_angles,
                         triangle_congruence, triangle_order_checks, triangle_sides)
from .measure import (FreeVector, LineFrame, ZERO_VECTOR, angle_measure, archimedes_count,
                      bisection_order_below, codirected, coordinate, frame_map, gauge_length,
                      length, length_ratio2, translation_of_vector, vec, vector_of_translation)
from .numeric import QuadraticValue, dyadic_approx, encloses_pi
from .space import (Angle, Line, Plane, Point, Ray, Segment, between, collinear,
                    intersect_line_plane, intersect_lines, is_monotonic, line_through,
                    monotonic_order, pasch_witness, plane_through, ray_in_angle,
                    segment_hits_line, side_of_line, side_of_plane)
from .transforms import (Isometry, classify_about, compose, conjugate, fixed_set, homothety,
                         image_line, image_plane, inversion, invert, parity, reflect_plane,
                         rotation, Similarity, sim_compose, translation, word_parity)

GROUPS = ("order", "congruence", "transforms", "measure", "similarity", "vectors")


# --- registry ----------------------------------------------------------------

@dataclass(frozen=True)
class Property:
    id: str
    group: str
    statement: str
    check: Callable[["Gen"], Optional[str]]


REGISTRY: dict[str, Property] = {}


def prop(id_: str, group: str, statement: str):
    def deco(fn):
        if id_ in REGISTRY:
            raise ValueError(f"duplicate property {id_}")
        REGISTRY[id_] = Property(id_, group, statement, fn)
        return fn
    return deco


# --- generators --------------------------------------------------------------

PYTHAGOREAN = ((3, 4), (5, 12), (8, 15), (7, 24), (20, 21), (1, 0), (0, 1))


class Gen:
    """Random rational configurations."""

    def __init__(self, rng: random.Random):
        self.rng = rng

    def q(self, lo: int = -12, hi: int = 12) -> Fraction:
        return Fraction(self.rng.randint(lo, hi), self.rng.randint(1, 4))

    def pos(self) -> Fraction:
        return Fraction(self.rng.randint(1, 12), self.rng.randint(1, 4))

    def inner(self) -> Fraction:
        """A rational strictly between 0 and 1."""
        d = self.rng.randint(2, 9)
        return Fraction(self.rng.randint(1, d - 1), d)

    def unit(self) -> Fraction:
        """A rational in [0, 1], endpoints included now and then."""
        r = self.rng.random()
        if r < 0.1:
            return Fraction(0)
        if r < 0.2:
            return Fraction(1)
        return self.inner()

    def point(self) -> Point:
        return Point(self.q(), self.q(), self.q())

    def vector(self) -> la.Vec:
        while True:
            v = la.vec(self.q(-5, 5), self.q(-5, 5), self.q(-5, 5))
            if not la.is_zero(v):
                return v

    def int_vector(self) -> la.Vec:
        while True:
            v = la.vec(*(self.rng.randint(-4, 4) for _ in range(3)))
            if not la.is_zero(v):
                return v

    def two_points(self) -> tuple[Point, Point]:
        A = self.point()
        return A, A + self.vector()

    def triangle(self) -> tuple[Point, Point, Point]:
        while True:
            A, B, C = self.point(), self.point(), self.point()
            if len({A, B, C}) == 3 and not collinear(A, B, C):
                return A, B, C

    def params(self, n: int, lo: int = -20, hi: int = 20) -> list[Fraction]:
        out: set = set()
        while len(out) < n:
            out.add(Fraction(self.rng.randint(lo, hi), self.rng.randint(1, 3)))
        vals = list(out)
        self.rng.shuffle(vals)
        return vals

    def plane(self) -> Plane:
        return Plane(self.point(), self.int_vector())

    def isometry(self, max_len: int = 4) -> Isometry:
        return Isometry.from_word([self.plane() for _ in range(self.rng.randint(1, max_len))])

    def in_plane(self, pl: Plane) -> Point:
        u, w = pl.basis()
        return pl.base + la.add(la.scale(self.q(), u), la.scale(self.q(), w))

    def pyth(self) -> la.Vec:
        """Planar vector (x, y, 0) with a rational norm."""
        a, b = self.rng.choice(PYTHAGOREAN)
        if self.rng.random() < 0.5:
            a, b = b, a
        k = self.pos()
        return la.vec(k * a * self.rng.choice((1, -1)), k * b * self.rng.choice((1, -1)), 0)


def _iso_pair(g: Gen):
    """Two congruent triangles related by a random rational isometry."""
    t = g.triangle()
    f = g.isometry()
    return t, tuple(f.apply(X) for X in t), f


# --- order ---------------------------------------------------------------------

@prop("A9", "order", "(A>B<C) implies (C>B<A)")
def _a9(g: Gen):
    A, C = g.two_points()
    t = g.inner() if g.rng.random() < 0.6 else g.q()
    B = A + la.scale(t, C - A)
    if between(A, B, C) != between(C, B, A):
        return f"A={A} B={B} C={C}"


@prop("A10", "order", "for A != B there is C with (A>B<C)")
def _a10(g: Gen):
    A, B = g.two_points()
    C = B + la.scale(g.pos(), B - A)
    if not (collinear(A, B, C) and between(A, B, C)):
        return f"A={A} B={B} C={C}"


def _line_triple(g: Gen):
    A, B = g.two_points()
    a = line_through(A, B)
    return tuple(a.at(t) for t in g.params(3))


@prop("A11", "order", "of three collinear points at most one lies between the others")
def _a11(g: Gen):
    A, B, C = _line_triple(g)
    if between(B, A, C) + between(A, B, C) + between(A, C, B) > 1:
        return f"A={A} B={B} C={C}"


@prop("Th2.4", "order", "of three collinear points exactly one lies between the others")
def _th24(g: Gen):
    A, B, C = _line_triple(g)
    if between(B, A, C) + between(A, B, C) + between(A, C, B) != 1:
        return f"A={A} B={B} C={C}"


def _pasch_config(g: Gen):
    while True:
        A, B, C = g.triangle()
        P = A + la.scale(g.inner(), B - A)
        u = la.add(la.scale(g.q(), B - A), la.scale(g.q(), C - A))
        if la.is_zero(u) or la.proportional(u, B - A):
            continue
        a = Line(P, u)
        if not any(a.contains(X) for X in (A, B, C)):
            return A, B, C, a


def _open_hit(P: Point, Q: Point, a: Line) -> bool:
    """Independent crossing test: solve P + s(Q - P) = a.base + t d."""
    if la.proportional(a.direction, Q - P):
        return False
    sol = la.solve([[(Q - P)[i], -a.direction[i]] for i in range(3)],
                   [(a.base - P)[i] for i in range(3)])
    if sol is None:
        return False
    (s, _), _ = sol
    return 0 < s < 1


@prop("A12", "order", "a line entering (AB) meets (AC) or (BC)")
def _a12(g: Gen):
    A, B, C, a = _pasch_config(g)
    if not (_open_hit(A, C, a) or _open_hit(B, C, a)):
        return f"triangle {A} {B} {C} line {a}"


@prop("Th2.5", "order", "a line entering (AB) meets exactly one of (AC), (BC)")
def _th25(g: Gen):
    A, B, C, a = _pasch_config(g)
    if _open_hit(A, C, a) == _open_hit(B, C, a):
        return f"triangle {A} {B} {C} line {a}"
    side, X = pasch_witness(A, B, C, a)
    P, Q = (A, C) if side == "AC" else (B, C)
    if not between(P, X, Q):
        return f"witness {X} not inside {side}"


@prop("Th2.1", "order", "the exterior of a segment is not empty")
def _th21(g: Gen):
    A, B = g.two_points()
    t = g.pos() + 1 if g.rng.random() < 0.5 else -g.pos()
    X = A + la.scale(t, B - A)
    if not line_through(A, B).contains(X) or Segment(A, B).contains(X):
        return f"A={A} B={B} X={X}"


@prop("Th2.2", "order", "points C1, C2 with (A>B<C1) and (B>A<C2) exist")
def _th22(g: Gen):
    A, B = g.two_points()
    C1, C2 = B + (B - A), A + (A - B)
    if not (between(A, B, C1) and between(B, A, C2)):
        return f"A={A} B={B}"


@prop("Th2.3", "order", "the interior of a segment is not empty")
def _th23(g: Gen):
    A, B = g.two_points()
    X = A + la.scale(g.inner(), B - A)
    if not (between(A, X, B) and Segment(A, B).contains(X, closed=False)):
        return f"A={A} B={B} X={X}"


def _between_triple(g: Gen):
    A, C = g.two_points()
    return A, A + la.scale(g.inner(), C - A), C


@prop("Th3.1", "order", "(A>B<C) implies [AB], [BC] are subsets of [AC]")
def _th31(g: Gen):
    A, B, C = _between_triple(g)
    AC = Segment(A, C)
    X = A + la.scale(g.unit(), B - A)
    Y = B + la.scale(g.unit(), C - B)
    if not (AC.contains(X) and AC.contains(Y)):
        return f"A={A} B={B} C={C} X={X} Y={Y}"


@prop("Th3.2", "order", "(A>B<C) implies [AC] = [AB] u [BC]")
def _th32(g: Gen):
    A, B, C = _between_triple(g)
    X = A + la.scale(g.q(-2, 3) if g.rng.random() < 0.3 else g.unit(), C - A)
    if Segment(A, C).contains(X) != (Segment(A, B).contains(X) or Segment(B, C).contains(X)):
        return f"A={A} B={B} C={C} X={X}"


@prop("Th3.3", "order", "(A>B<C) implies [AB] n [BC] = {B}")
def _th33(g: Gen):
    A, B, C = _between_triple(g)
    X = B if g.rng.random() < 0.2 else A + la.scale(g.q(-2, 3), C - A)
    if (Segment(A, B).contains(X) and Segment(B, C).contains(X)) != (X == B):
        return f"A={A} B={B} C={C} X={X}"


@prop("Th4.1", "order", "a point joins a monotonic sequence keeping it monotonic")
def _th41(g: Gen):
    A, B = g.two_points()
    a = line_through(A, B)
    ts = g.params(g.rng.randint(3, 7))
    seq = [a.at(t) for t in sorted(ts[:-1])]
    new = a.at(ts[-1])
    order = monotonic_order(seq + [new])
    rest = [X for X in order if X != new]
    if not is_monotonic(order) or rest not in (seq, seq[::-1]):
        return f"seq={[str(X) for X in seq]} B={new}"


@prop("Th4.2", "order", "collinear points can be enumerated monotonically")
def _th42(g: Gen):
    A, B = g.two_points()
    a = line_through(A, B)
    pts = [a.at(t) for t in g.params(g.rng.randint(3, 7))]
    if not is_monotonic(monotonic_order(pts)):
        return f"points={[str(X) for X in pts]}"


@prop("Th4.3", "order", "(A>B<C) iff A<B<C or C<B<A for a direction on the line")
def _th43(g: Gen):
    A, B, C = _line_triple(g)
    d = line_through(A, B).direction
    if g.rng.random() < 0.5:
        d = la.scale(-1, d)

    def prec(X, Y):
        return la.dot(Y - X, d) > 0

    if between(A, B, C) != ((prec(A, B) and prec(B, C)) or (prec(C, B) and prec(B, A))):
        return f"A={A} B={B} C={C} d={d}"


@prop("(5.1)", "order", "a point O splits its line into two open rays and O")
def _p51(g: Gen):
    O, E = g.two_points()
    a = line_through(O, E)
    X = a.at(g.q()) if g.rng.random() < 0.9 else O
    # synthetic classes: X = O, X on the ray OE, X on the opposite ray
    classes = [X == O, X != O and not between(X, O, E), between(X, O, E)]
    s = la.dot(X - O, E - O)
    analytic = [s == 0, s > 0, s < 0]
    if sum(classes) != 1 or classes != analytic:
        return f"O={O} E={E} X={X}"


@prop("(5.2)", "order", "a line splits its plane into two open half-planes and itself")
def _p52(g: Gen):
    A0, B0, C0 = g.triangle()
    pl = plane_through(A0, B0, C0)
    a = line_through(A0, B0)
    X, Y = g.in_plane(pl), g.in_plane(pl)
    ref = C0

    def same(P, Q):
        return P == Q or segment_hits_line(P, Q, a, closed=True) is None

    for P in (X, Y):
        on = a.contains(P)
        if on:
            if side_of_line(P, a, pl) != 0:
                return f"{P} on a but signed"
            continue
        if same(ref, P) != (side_of_line(P, a, pl) == side_of_line(ref, a, pl)):
            return f"a={a} ref={ref} X={P}"
    if not a.contains(X) and not a.contains(Y):
        if same(ref, X) and same(ref, Y) and not same(X, Y):
            return f"transitivity a={a} X={X} Y={Y}"


@prop("(6.1)", "order", "a plane splits space into two open half-spaces and itself")
def _p61(g: Gen):
    pl = g.plane()
    ref = g.point()
    while pl.contains(ref):
        ref = g.point()
    X = g.point() if g.rng.random() < 0.9 else g.in_plane(pl)

    def crosses(P, Q):
        if P == Q:
            return pl.contains(P)
        Z = intersect_line_plane(line_through(P, Q), pl)
        return Z is not None and Segment(P, Q).contains(Z)

    if pl.contains(X):
        if side_of_plane(X, pl) != 0:
            return f"{X} on plane but signed"
        return None
    if (not crosses(ref, X)) != (side_of_plane(X, pl) == side_of_plane(ref, pl)):
        return f"plane={pl} ref={ref} X={X}"


@prop("Th5.1", "order", "angle = interior u sides; interior test by half-planes agrees with the chord test")
def _th51(g: Gen):
    A, O, B = g.triangle()
    ang = Angle.at(A, O, B)
    X = g.in_plane(ang.plane)
    if X == O:
        return None
    r = Ray(O, X)
    on_side = ang.side1.contains(X) or ang.side2.contains(X)
    inside = ang.contains_interior(X)
    if on_side and inside:
        return f"angle {ang} X={X}: side point counted interior"
    if inside != ray_in_angle(r, ang, "chord"):
        return f"angle {ang} X={X}"


# --- congruence ---------------------------------------------------------------

def _same_norm(g: Gen, v: la.Vec) -> la.Vec:
    """A signed permutation of v (same Euclidean norm)."""
    idx = [0, 1, 2]
    g.rng.shuffle(idx)
    return tuple(v[i] * g.rng.choice((1, -1)) for i in idx)


@prop("A13", "congruence", "a segment lays off on a ray at exactly one point (exact cases)")
def _a13(g: Gen):
    O, d = g.point(), g.vector()
    k = g.pos()
    P = g.point()
    s = Segment(P, P + la.scale(k, _same_norm(g, d)))
    res = lay_off(s, Ray(O, O + d))
    if not res.exact or res.point != O + la.scale(k, d):
        return f"s={s} ray from {O} dir {d}"
    if not seg_congruent(s, Segment(O, res.point)):
        return f"not congruent: {res.point}"
    other = O + la.scale(k + g.pos(), d) if g.rng.random() < 0.5 else O + la.scale(k * g.inner(), d)
    if seg_congruent(s, Segment(O, other)):
        return f"second point {other}"


@prop("A13-cert", "congruence", "inexact lay-off carries a defect below 2^-m")
def _a13c(g: Gen):
    O, d = g.point(), g.vector()
    P = g.point()
    s = Segment(P, P + g.vector())
    m = g.rng.randint(4, 40)
    res = lay_off(s, Ray(O, O + d), m)
    if res.exact:
        return None if seg_congruent(s, Segment(O, res.point)) else f"bad exact point {res.point}"
    # |OX|^2 = t^2 |d|^2 with t = param.lo below the true ratio
    if not (res.defect < Fraction(1, 2 ** m) and
            res.param.lo.value ** 2 * la.norm2(d) <= s.length2() < res.param.hi.value ** 2 * la.norm2(d)):
        return f"s={s} d={d} m={m}"


@prop("A14", "congruence", "segment congruence is transitive")
def _a14(g: Gen):
    A, B = g.two_points()
    f1, f2 = g.isometry(), g.isometry()
    s1 = Segment(A, B)
    s2 = Segment(f1.apply(A), f1.apply(B))
    s3 = Segment(f2.apply(s2.A), f2.apply(s2.B))
    if not (seg_congruent(s1, s2) and seg_congruent(s2, s3) and seg_congruent(s1, s3)):
        return f"{s1} {s2} {s3}"


@prop("A15", "congruence", "segment addition and subtraction respect congruence")
def _a15(g: Gen):
    A, B, C = _between_triple(g)
    K = g.point()
    e = _same_norm(g, C - A)
    L = K + la.scale((B - A)[0] / (C - A)[0] if (C - A)[0] else
                     ((B - A)[1] / (C - A)[1] if (C - A)[1] else (B - A)[2] / (C - A)[2]), e)
    M = K + e
    if not between(K, L, M):
        return f"construction K={K} L={L} M={M}"
    ab, bc, ac = Segment(A, B), Segment(B, C), Segment(A, C)
    kl, lm, km = Segment(K, L), Segment(L, M), Segment(K, M)
    if seg_congruent(ab, kl) and seg_congruent(bc, lm) and not seg_congruent(ac, km):
        return f"(1) A={A} B={B} C={C} K={K} L={L} M={M}"
    if seg_congruent(ab, kl) and seg_congruent(ac, km) and not seg_congruent(bc, lm):
        return f"(2) A={A} B={B} C={C} K={K} L={L} M={M}"
    # shifted L: the conclusion must fail together with the premise
    L2 = K + la.scale(g.inner(), e)
    if seg_congruent(ab, Segment(K, L2)) != seg_congruent(bc, Segment(L2, M)):
        return f"(2') L={L2}"


@prop("A16", "congruence", "an angle lays off into a half-plane along exactly one ray")
def _a16(g: Gen):
    A, O, B = g.triangle()
    ang = Angle.at(A, O, B)
    f = g.isometry()
    O2, M = f.apply(O), f.apply(A)
    N = f.apply(B)
    pl = plane_through(O2, M, N)
    m_line = line_through(O2, M)
    # target half-plane: the side of a random point of the plane
    Q = g.in_plane(pl)
    while m_line.contains(Q):
        Q = g.in_plane(pl)
    if side_of_line(N, m_line, pl) != side_of_line(Q, m_line, pl):
        N = reflect_plane(Plane(O2, la.cross(pl.normal, M - O2))).apply(N)
    if side_of_line(N, m_line, pl) != side_of_line(Q, m_line, pl):
        return "laid-off ray not in the half-plane"
    if not angle_congruent(ang, Angle.at(M, O2, N)):
        return f"angle {ang} vs {Angle.at(M, O2, N)}"
    # the mirror ray has the same shape but lies across the boundary
    N2 = reflect_plane(Plane(O2, la.cross(pl.normal, M - O2))).apply(N)
    if side_of_line(N2, m_line, pl) == side_of_line(Q, m_line, pl):
        return "two rays in one half-plane"
    # any other ray in the half-plane gives a different angle
    N3 = N + la.scale(g.pos(), M - O2) if g.rng.random() < 0.5 else N + la.scale(-g.inner(), M - O2)
    if side_of_line(N3, m_line, pl) == side_of_line(Q, m_line, pl) and \
            not Ray(O2, N3).same_ray(Ray(O2, N)) and angle_congruent(ang, Angle.at(M, O2, N3)):
        return f"second ray through {N3}"


@prop("A17", "congruence", "SAS data force the remaining angle")
def _a17(g: Gen):
    t1, t2, _ = _iso_pair(g)
    (A, B, C), (P, Q, R) = t1, t2
    if sas_holds(t1, t2) and not angle_congruent(Angle.at(A, B, C), Angle.at(P, Q, R)):
        return f"{t1} {t2}"
    if not sas_holds(t1, t2):
        return "constructed pair fails SAS"


@prop("Th5.1-SAS", "congruence", "two sides and the included angle give congruent triangles")
def _sas(g: Gen):
    t1, t2, _ = _iso_pair(g)
    if not sas_holds(t1, t2) or triangle_congruence(t1, t2) != (0, 1, 2):
        return f"{t1} {t2}"
    # break the included angle: SAS must fail and so must congruence
    A, B, C = t2
    C2 = C + la.scale(g.inner(), B - C)
    if collinear(A, B, C2):
        return None
    t3 = (A, B, C2)
    if sas_holds(t1, t3) and triangle_congruence(t1, t3) is None:
        return f"perturbed {t3}"


@prop("Th5.2-ASA", "congruence", "a side and the two adjacent angles give congruent triangles")
def _asa(g: Gen):
    t1, t2, _ = _iso_pair(g)
    if not asa_holds(t1, t2) or triangle_congruence(t1, t2) != (0, 1, 2):
        return f"{t1} {t2}"


@prop("Th5.5-SSS", "congruence", "three pairs of congruent sides give congruent triangles")
def _sss(g: Gen):
    t1, t2, _ = _iso_pair(g)
    perm = [0, 1, 2]
    g.rng.shuffle(perm)
    u = tuple(t2[i] for i in perm)
    p = triangle_congruence(t1, u, full=False)
    if p is None:
        return f"{t1} {u}"
    v = tuple(u[i] for i in p)
    if not all(angle_congruent(a, b) for a, b in zip(triangle_angles(t1), triangle_angles(v))):
        return f"angles differ under {p}"


@prop("L6.2", "congruence", "all right angles are congruent")
def _l62(g: Gen):
    O1, O2 = g.point(), g.point()
    u1, u2 = g.vector(), g.vector()
    v1 = la.cross(u1, g.vector())
    v2 = la.cross(u2, g.vector())
    if la.is_zero(v1) or la.is_zero(v2):
        return None
    a1 = Angle(O1, Ray(O1, O1 + u1), Ray(O1, O1 + v1))
    a2 = Angle(O2, Ray(O2, O2 + u2), Ray(O2, O2 + v2))
    if not angle_congruent(a1, a2) or angle_shape(a1).kind != "right":
        return f"{a1} {a2}"


def _compare_laws(less, cong, x, y, z, x2, y2) -> Optional[str]:
    if less(x, y) and cong(x, y):
        return "(1) < with congruent"
    if less(x, y) and less(y, x):
        return "(2) asymmetry"
    if less(x, y) and less(y, z) and not less(x, z):
        return "(3) transitivity"
    if cong(x, x2) and cong(y, y2) and less(x, y) and not less(x2, y2):
        return "(4) invariance"
    if not cong(x, y) and not (less(x, y) or less(y, x)):
        return "(5) totality"
    return None


@prop("V.Th1.1", "congruence", "segment comparison: exclusion, asymmetry, transitivity, invariance, totality")
def _v11(g: Gen):
    segs = []
    for _ in range(3):
        A, B = g.two_points()
        segs.append(Segment(A, B))
    if g.rng.random() < 0.3:
        f = g.isometry()
        segs[1] = Segment(f.apply(segs[0].A), f.apply(segs[0].B))
    f = g.isometry()
    img = [Segment(f.apply(s.A), f.apply(s.B)) for s in segs]
    w = _compare_laws(seg_less, seg_congruent, *segs, img[0], img[1])
    return f"{w}: {[str(s) for s in segs]}" if w else None


@prop("V.Th2.1", "congruence", "angle comparison: exclusion, asymmetry, transitivity, invariance, totality")
def _v21(g: Gen):
    angs = [Angle.at(*g.triangle()) for _ in range(3)]
    f = g.isometry()
    if g.rng.random() < 0.3:
        A, O, B = angs[0].side1.through, angs[0].vertex, angs[0].side2.through
        angs[1] = Angle.at(f.apply(A), f.apply(O), f.apply(B))
    img = [Angle.at(f.apply(a.side1.through), f.apply(a.vertex), f.apply(a.side2.through))
           for a in angs]
    w = _compare_laws(angle_less, angle_congruent, *angs, img[0], img[1])
    return f"{w}: {[str(a) for a in angs]}" if w else None


def _order_check(key: str):
    def check(g: Gen):
        t = g.triangle()
        if not triangle_order_checks(t)[key]:
            return f"triangle {t[0]} {t[1]} {t[2]}"
    return check


for _id, _key, _st in (("V.Th2.3", "exterior-angle", "an interior angle is below each non-adjacent exterior angle"),
                       ("V.Th2.4", "side-angle-order", "the bigger side lies opposite the bigger angle"),
                       ("V.Th2.5", "triangle-inequality", "any two sides together exceed the third"),
                       ("V.Th2.6", "two-acute", "a triangle has at least two acute angles")):
    prop(_id, "congruence", _st)(_order_check(_key))


# --- transforms ----------------------------------------------------------------

@prop("word-affine", "transforms", "reflection words and affine forms agree")
def _coherence(g: Gen):
    f = g.isometry(6)
    X = g.point()
    if f.apply(X) != f.apply_word(X):
        return f"word {[str(p) for p in f.word]} at {X}"
    if Isometry.from_affine(f.matrix, f.t) != f:
        return "from_affine round trip"
    if compose(f, invert(f)) != Isometry.from_word(()):
        return "f o f^-1 != id"


@prop("z.z=id", "transforms", "a mirror reflection is an involution")
def _zz(g: Gen):
    z = reflect_plane(g.plane())
    if not compose(z, z).is_identity:
        return f"{z.word[0]}"


@prop("assoc", "transforms", "composition is associative")
def _assoc(g: Gen):
    f, h, k = g.isometry(), g.isometry(), g.isometry()
    if compose(compose(f, h), k) != compose(f, compose(h, k)):
        return "associativity"


def _axis_setup(g: Gen):
    """A transported z-axis with half-plane points at Pythagorean directions."""
    T = g.isometry(3)
    axis = image_line(T, Line(Point(0, 0, 0), (0, 0, 1)))
    pts = [T.apply(Point(v[0], v[1], g.q())) for v in (g.pyth() for _ in range(4))]
    return T, axis, pts


@prop("IV.Th9.3", "transforms", "rotation and reflection relations about one axis")
def _th93(g: Gen):
    T, axis, (H, K, L, _) = _axis_setup(g)
    try:
        hk, kl, hl, kh = (rotation(axis, H, K), rotation(axis, K, L),
                          rotation(axis, H, L), rotation(axis, K, H))
    except Exception as exc:  # noqa: BLE001 - reported as a witness
        return f"construction: {exc}"
    if compose(kl, hk) != hl:
        return f"theta_kl o theta_hk != theta_hl  H={H} K={K} L={L}"
    # a plane through the axis
    alpha = Plane(axis.base, la.cross(axis.direction, g.vector()))
    if la.is_zero(alpha.normal):
        return None
    za = reflect_plane(alpha)
    if compose(hk, za) != compose(za, kh):
        return "theta_hk o z_a != z_a o theta_kh"
    if not compose(za, za).is_identity:
        return "z_a o z_a != id"
    beta = Plane(axis.base, la.cross(axis.direction, H - axis.base))
    Kz = za.apply(H)
    if compose(za, reflect_plane(beta)) != rotation(axis, H, Kz):
        return "z_a o z_b != theta_hk"


@prop("IV.Th9.1", "transforms", "a non-trivial rotation fixes exactly its axis")
def _th91(g: Gen):
    T, axis, (H, K, _, _) = _axis_setup(g)
    f = rotation(axis, H, K)
    fs = fixed_set(f)
    if f.is_identity:
        return None if fs == "space" else f"identity with fixed set {fs}"
    if fs != axis:
        return f"fixed set {fs} vs axis {axis}"


@prop("IV.Th9.5", "transforms", "rotations about one axis commute")
def _th95(g: Gen):
    T, axis, (H, K, L, Q) = _axis_setup(g)
    f, h = rotation(axis, H, K), rotation(axis, L, Q)
    if compose(f, h) != compose(h, f):
        return f"H={H} K={K} L={L} Q={Q}"


@prop("IV.Th9.6", "transforms", "rotations about two axes through O compose to a rotation about a third axis through O")
def _th96(g: Gen):
    O = g.point()
    T1 = compose(translation(O.vec), g.isometry(3))
    T2 = compose(translation(O.vec), g.isometry(3))
    # re-anchor the transports so each axis passes through O
    rots = []
    for T in (T1, T2):
        T = compose(translation(la.sub(O.vec, T.apply(Point(0, 0, 0)).vec)), T)
        axis = image_line(T, Line(Point(0, 0, 0), (0, 0, 1)))
        H, K = (T.apply(Point(v[0], v[1], 0)) for v in (g.pyth(), g.pyth()))
        rots.append((axis, rotation(axis, H, K)))
    (a1, f1), (a2, f2) = rots
    if a1 == a2 or f1.is_identity or f2.is_identity:
        return None
    h = compose(f1, f2)
    c = classify_about(h, O)
    if c.kind == "identity":
        return None
    if c.kind != "rotation" or parity(h) != "even":
        return f"composition classified {c.kind}"
    if fixed_set(h) != c.axis or not c.axis.contains(O):
        return f"axis {c.axis} vs fixed set {fixed_set(h)}"


@prop("parity", "transforms", "parity of a composition is the XOR of the parities")
def _parity(g: Gen):
    f, h = g.isometry(5), g.isometry(5)
    fh = compose(f, h)
    odd = (parity(f) == "odd") != (parity(h) == "odd")
    if (parity(fh) == "odd") != odd:
        return "parity xor"
    if word_parity(fh) != parity(fh) or word_parity(f) != parity(f):
        return "word length parity vs determinant"


@prop("VI.Th10.1", "transforms", "f is a translation iff the vectors X->f(X) all agree")
def _vi101(g: Gen):
    c = g.vector()
    p = translation(c)
    X, Y = g.point(), g.point()
    if p.apply(X) - X != p.apply(Y) - Y:
        return f"translation by {c}"
    f = g.isometry()
    is_tr = f.matrix == la.identity()
    samples = [g.point() for _ in range(4)] + [Point(0, 0, 0), Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1)]
    const = len({f.apply(Z) - Z for Z in samples}) == 1
    if is_tr != const:
        return f"isometry word {[str(q) for q in f.word]}"


@prop("VI.Th10.2-3", "transforms", "translations compose to a translation and commute")
def _vi102(g: Gen):
    a, b = g.vector(), g.vector()
    pa, pb = translation(a), translation(b)
    ab = compose(pa, pb)
    if ab != translation(la.add(a, b)) or ab != compose(pb, pa):
        return f"a={a} b={b}"


@prop("VI.Th10.4-5", "transforms", "a product of translations with a stable point is the identity")
def _vi104(g: Gen):
    vs = [g.vector() for _ in range(g.rng.randint(1, 4))]
    # close the loop half of the time so the product is the identity
    vs.append(la.scale(-1, _sum(vs)) if g.rng.random() < 0.5 else g.vector())
    f = Isometry.from_word(())
    for v in vs:
        f = compose(translation(v), f)
    fs = fixed_set(f)
    if fs is not None and not f.is_identity:
        return f"stable set {fs} of a non-identity product"
    if f.is_identity and fs != "space":
        return "identity without full fixed set"


def _sum(vs):
    out = la.ZERO
    for v in vs:
        out = la.add(out, v)
    return out


@prop("IV.Th14.2", "transforms", "a translation by a nonzero vector has no stable points")
def _th142(g: Gen):
    c = g.vector()
    if fixed_set(translation(c)) is not None:
        return f"c={c}"


@prop("IV.Th15.2", "transforms", "conjugation maps reflections, rotations and translations to their images")
def _th152(g: Gen):
    f = g.isometry()
    beta = g.plane()
    if conjugate(f, reflect_plane(beta)) != reflect_plane(image_plane(f, beta)):
        return f"reflection in {beta}"
    T, axis, (H, K, _, _) = _axis_setup(g)
    r = rotation(axis, H, K)
    rc = conjugate(f, r)
    if rc != rotation(image_line(f, axis), f.apply(H), f.apply(K)):
        return "rotation image"
    tr = lambda M: M[0][0] + M[1][1] + M[2][2]  # noqa: E731 - trace fixes the angle
    if tr(rc.matrix) != tr(r.matrix):
        return "rotation angle changed"
    c = g.vector()
    if conjugate(f, translation(c)) != translation(f.linear(c)):
        return f"translation by {c}"


# --- measure --------------------------------------------------------------------

@prop("nesting", "measure", "binary-rational approximations have width 2^-m and nest")
def _nest(g: Gen):
    x = g.q(-50, 50)
    prev = None
    for m in range(0, 24):
        iv = dyadic_approx(x, m)
        if iv.width != Fraction(1, 2 ** m) or not iv.contains(x):
            return f"x={x} m={m}"
        if prev is not None and not prev.contains_interval(iv):
            return f"x={x} m={m} not nested"
        prev = iv


@prop("length", "measure", "length enclosures bracket the exact root and agree with gauge counting")
def _length(g: Gen):
    O, E = g.two_points()
    fr = LineFrame(O, E)
    P, Q = g.two_points()
    m = g.rng.randint(1, 30)
    r2 = length_ratio2(P, Q, fr)
    iv = length(P, Q, fr, m).enclosure
    if not (iv.lo.value ** 2 <= r2 <= iv.hi.value ** 2):
        return f"r2={r2} m={m} iv={iv}"
    gauge = gauge_length(P, Q, fr, m)
    if not (gauge.lo.value ** 2 <= r2 < gauge.hi.value ** 2):
        return f"gauge {gauge} for r2={r2}"
    if not iv.is_exact and (iv.lo != gauge.lo or iv.hi != gauge.hi):
        return f"gauge {gauge} vs enclosure {iv}"


@prop("V.Th7.5", "measure", "changing the unit multiplies lengths by the unit ratio")
def _v75(g: Gen):
    O1, E1 = g.two_points()
    O2, E2 = g.two_points()
    f1, f2 = LineFrame(O1, E1), LineFrame(O2, E2)
    P, Q = g.two_points()
    if length_ratio2(P, Q, f1) != length_ratio2(P, Q, f2) * length_ratio2(O2, E2, f1):
        return f"P={P} Q={Q}"


@prop("archimedes", "measure", "a multiple of the unit exceeds any segment; a bisection of it falls below")
def _arch(g: Gen):
    O, E = g.two_points()
    fr = LineFrame(O, E)
    P, Q = g.two_points()
    n = archimedes_count(P, Q, fr)
    r2 = length_ratio2(P, Q, fr)
    if not (n * n > r2 and (n - 1) ** 2 <= r2):
        return f"n={n} r2={r2}"
    m = bisection_order_below(P, Q, fr)
    if not Fraction(1, 4 ** m) < r2:
        return f"m={m} r2={r2}"


@prop("frame-map", "measure", "same-coordinate maps between lines are similarities")
def _frames(g: Gen):
    O1, E1 = g.two_points()
    O2, E2 = g.two_points()
    f1, f2 = LineFrame(O1, E1), LineFrame(O2, E2)
    h = frame_map(f1, f2)
    X, Y = f1.point(g.q()), f1.point(g.q())
    if X == Y:
        return None
    k2 = f2.unit2 / f1.unit2
    if la.norm2(h(Y) - h(X)) != k2 * la.norm2(Y - X):
        return f"X={X} Y={Y}"
    if coordinate(h(X), f2, 0).exact != coordinate(X, f1, 0).exact:
        return "coordinate not preserved"


@prop("VI.Th4.1", "measure", "the angle enclosures of a triangle sum to an enclosure of pi")
def _angle_sum(g: Gen):
    A, B, C = g.triangle()
    m = 20
    total = None
    for ang in triangle_angles((A, B, C)):
        iv = angle_measure(ang, m).interval()
        total = iv if total is None else total + iv
    if total.width > 4 * Fraction(1, 2 ** m) or not encloses_pi(total):
        return f"triangle {A} {B} {C}: {total}"


def _len_sum_exact(k: Fraction, s0: Segment, s1: Segment, s2: Segment) -> bool:
    lhs2 = k * k * s0.length2()
    a, b = s1.length2(), s2.length2()
    return QuadraticValue(Fraction(0), 4 * a * b, 1) == lhs2 - a - b and lhs2 >= a + b


@prop("VI.Th5.1", "measure", "a midsegment is half the third side and parallel to it")
def _midseg(g: Gen):
    A, B, C = g.triangle()
    M, N = Segment(A, B).midpoint(), Segment(B, C).midpoint()
    if Segment(A, C).length2() != 4 * Segment(M, N).length2() or not la.proportional(N - M, C - A):
        return f"triangle {A} {B} {C}"


@prop("VI.Th6.2", "measure", "the trapezium midline is the mean of the bases")
def _trap(g: Gen):
    D = g.point()
    d = g.vector()
    P = D + la.scale(g.pos(), d)
    R = D + g.vector()
    if la.proportional(R - D, d):
        return None
    Q = R + la.scale(g.pos(), d)
    K, L = Segment(D, R).midpoint(), Segment(P, Q).midpoint()
    if not _len_sum_exact(Fraction(2), Segment(K, L), Segment(D, P), Segment(R, Q)):
        return f"trapezium {D} {P} {Q} {R}"


# --- similarity ------------------------------------------------------------------

def _random_similarity(g: Gen):
    O = g.point()
    k = g.q(-6, 6)
    while k == 0:
        k = g.q(-6, 6)
    return sim_compose(homothety(O, k), _as_sim(g.isometry())), k


def _as_sim(f: Isometry) -> Similarity:
    return Similarity(Point(0, 0, 0), 1, f)


@prop("VI.Th11.1", "similarity", "a homothety scales squared lengths by k^2")
def _h111(g: Gen):
    O, k = g.point(), g.q(-6, 6)
    if k == 0:
        return None
    h = homothety(O, k)
    A, B = g.two_points()
    if la.norm2(h(B) - h(A)) != k * k * la.norm2(B - A):
        return f"O={O} k={k} A={A} B={B}"
    if not la.proportional(h(B) - h(A), B - A):
        return "image not parallel"


@prop("VI.Th11.3", "similarity", "similarities preserve angle shapes")
def _h113(g: Gen):
    f, _ = _random_similarity(g)
    A, O, B = g.triangle()
    if not angle_congruent(Angle.at(A, O, B), Angle.at(f(A), f(O), f(B))):
        return f"angle at {O}"


@prop("VI.Th11.4", "similarity", "proportional sides around a congruent angle give similar triangles")
def _h114(g: Gen):
    A, B, C = g.triangle()
    k = g.pos()
    f = g.isometry()
    P = f.apply(A)
    Q = P + la.scale(k, f.linear(B - A))
    R = P + la.scale(k, f.linear(C - A))
    if not angle_congruent(Angle.at(B, A, C), Angle.at(Q, P, R)):
        return "construction"
    s1, s2 = triangle_sides((A, B, C)), triangle_sides((P, Q, R))
    if any(y != k * k * x for x, y in zip(s1, s2)):
        return f"sides {s1} vs {s2}"
    if not all(angle_congruent(a, b) for a, b in zip(triangle_angles((A, B, C)), triangle_angles((P, Q, R)))):
        return "angles"


@prop("VI.Th11.5", "similarity", "two congruent angles give similar triangles")
def _h115(g: Gen):
    A, B, C = g.triangle()
    k = g.pos()
    f = g.isometry()
    P = f.apply(A)
    Q = P + la.scale(k, f.linear(B - A))
    # R is found where the sides copied at P and at Q meet
    R = intersect_lines(Line(P, f.linear(C - A)), Line(Q, f.linear(C - B)))
    if R is None:
        return "copied sides do not meet"
    if not (angle_congruent(Angle.at(B, A, C), Angle.at(Q, P, R))
            and angle_congruent(Angle.at(A, B, C), Angle.at(P, Q, R))):
        return "construction"
    s1, s2 = triangle_sides((A, B, C)), triangle_sides((P, Q, R))
    if any(y != k * k * x for x, y in zip(s1, s2)):
        return f"sides {s1} vs {s2}"
    if not angle_congruent(Angle.at(A, C, B), Angle.at(P, R, Q)):
        return "third angle"


@prop("VI.Th11.6", "similarity", "three proportional sides give similar triangles")
def _h116(g: Gen):
    f, k = _random_similarity(g)
    t = g.triangle()
    u = tuple(f(X) for X in t)
    s1, s2 = triangle_sides(t), triangle_sides(u)
    if any(y != k * k * x for x, y in zip(s1, s2)):
        return f"sides {s1} vs {s2}"
    if not all(angle_congruent(a, b) for a, b in zip(triangle_angles(t), triangle_angles(u))):
        return f"angles differ for {t}"


@prop("h(-1)=i", "similarity", "the homothety with factor -1 is the central inversion")
def _hinv(g: Gen):
    O = g.point()
    if homothety(O, -1) != inversion(O):
        return f"O={O}"


@prop("sim-compose", "similarity", "composed similarities act as the composition")
def _simc(g: Gen):
    f, _ = _random_similarity(g)
    h, _ = _random_similarity(g)
    X = g.point()
    if sim_compose(f, h)(X) != f(h(X)):
        return f"X={X}"


# --- vectors ----------------------------------------------------------------------

def _fv(g: Gen) -> FreeVector:
    A, B = g.point(), g.point()
    return vec(A, B)


@prop("VI.Th12.3", "vectors", "the eight linear-space laws of vector addition and scaling")
def _laws(g: Gen):
    a, b, c = _fv(g), _fv(g), _fv(g)
    k, l = g.q(), g.q()
    checks = {
        "a+b=b+a": a + b == b + a,
        "(a+b)+c=a+(b+c)": (a + b) + c == a + (b + c),
        "a+0=a": a + ZERO_VECTOR == a,
        "a+(-a)=0": (a + (-a)).is_zero,
        "1a=a": 1 * a == a,
        "(kl)a=k(la)": (k * l) * a == k * (l * a),
        "(k+l)a=ka+la": (k + l) * a == k * a + l * a,
        "k(a+b)=ka+kb": k * (a + b) == k * a + k * b,
    }
    bad = [name for name, ok in checks.items() if not ok]
    if bad:
        return f"{bad} for a={a} b={b} c={c} k={k} l={l}"


@prop("VI.(10.4)", "vectors", "triangle rule AB + BC = AC")
def _tri_rule(g: Gen):
    A, B, C = g.point(), g.point(), g.point()
    if vec(A, B) + vec(B, C) != vec(A, C):
        return f"A={A} B={B} C={C}"


@prop("VI.(10.5)", "vectors", "parallelogram rule AB + AD = AC")
def _para_rule(g: Gen):
    A, B, D = g.triangle()
    C = B + (D - A)
    # ABCD is a parallelogram: opposite sides codirected by the definition
    if not codirected(Segment(A, B), Segment(D, C)) or not codirected(Segment(A, D), Segment(B, C)):
        return f"not a parallelogram {A} {B} {C} {D}"
    if vec(A, B) + vec(A, D) != vec(A, C):
        return f"A={A} B={B} D={D}"


@prop("codirected", "vectors", "codirection by the definition agrees with the analytic test")
def _codir(g: Gen):
    A, B = g.two_points()
    r = g.rng.random()
    if r < 0.4:
        C = g.point()
        D = C + la.scale(g.q(-3, 3) or Fraction(1), B - A)
    elif r < 0.6:
        C = A + la.scale(g.q(), B - A)
        D = A + la.scale(g.q(), B - A)
    else:
        C, D = g.two_points()
    if C == D:
        return None
    u, v = Segment(A, B), Segment(C, D)
    if codirected(u, v) != codirected(u, v, method="analytic"):
        return f"[{A}->{B}] [{C}->{D}]"


@prop("vector-translation", "vectors", "vectors and parallel translations correspond one to one")
def _vt(g: Gen):
    u = _fv(g)
    if vector_of_translation(translation_of_vector(u)) != u:
        return f"u={u}"
    X = g.point()
    p = translation_of_vector(u)
    if vec(X, p.apply(X)) != u:
        return f"X={X}"


# --- runner ------------------------------------------------------------------------

@dataclass
class PropertyResult:
    id: str
    group: str
    statement: str
    cases: int
    failures: int = 0
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"id": self.id, "group": self.group, "statement": self.statement,
                "cases": self.cases, "failures": self.failures,
                "verdict": "pass" if self.passed else "fail", "witnesses": self.witnesses}


@dataclass
class SuiteReport:
    model: str
    cases: int
    seed: int
    results: list
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {"schema": 1, "model": self.model, "cases": self.cases, "seed": self.seed,
                "passed": self.passed,
                "summary": {"properties": len(self.results),
                            "failed": sum(not r.passed for r in self.results)},
                "results": [r.to_json() for r in self.results], "notes": list(self.notes)}


def run_property(p: Property, cases: int, seed: int, keep: int = 5) -> PropertyResult:
    g = Gen(random.Random(f"{seed}:{p.id}"))
    res = PropertyResult(p.id, p.group, p.statement, cases)
    for i in range(cases):
        try:
            w = p.check(g)
        except Exception as exc:  # noqa: BLE001 - any crash is a failed case
            w = f"{type(exc).__name__}: {exc}"
        if w is not None:
            res.failures += 1
            if len(res.witnesses) < keep:
                res.witnesses.append(f"case {i}: {w}")
    return res


def _file_suite(path: Path, cases: int, seed: int) -> SuiteReport:
    model = incidence.load_model(path)
    results = []
    for r in incidence.check_axioms(model):
        results.append(PropertyResult(r.id, "incidence", "", 1, int(not r.passed),
                                      [incidence.AxiomReport.to_json(r)["witnesses"]] if not r.passed else []))
    notes = []
    if all(r.passed for r in results):
        for r in incidence.check_incidence_theorems(model):
            results.append(PropertyResult(r.id, "incidence", "", 1, int(not r.passed),
                                          [r.to_json()["witnesses"]] if not r.passed else []))
    else:
        notes.append("theorems skipped: the model fails the incidence axioms")
    return SuiteReport(str(path), cases, seed, results, notes)


def run_axiom_suite(model: str = "analytic", cases: int = 100, seed: int = 0,
                    groups: Optional[Iterable[str]] = None,
                    ids: Optional[Iterable[str]] = None, workers: int = 1) -> SuiteReport:
    """Run the registered properties on the analytic model, or the incidence
    checks on a model file.

    Properties are independent; with ``workers > 1`` they run in a process
    pool and are merged back in registry order, so reports do not depend on
    the worker count.
    """
    if model != "analytic":
        path = Path(model)
        if not path.is_file():
            raise ValueError(f"unknown model {model!r}: expected 'analytic' or a model file")
        return _file_suite(path, cases, seed)
    groups = set(GROUPS if groups is None else groups)
    unknown = groups - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown groups {sorted(unknown)}")
    wanted = set(ids) if ids is not None else None
    props = [p.id for p in REGISTRY.values()
             if p.group in groups and (wanted is None or p.id in wanted)]
    if workers > 1 and len(props) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_by_id, props, [cases] * len(props), [seed] * len(props)))
    else:
        results = [_run_by_id(i, cases, seed) for i in props]
    return SuiteReport(model, cases, seed, results)


def _run_by_id(id_: str, cases: int, seed: int) -> PropertyResult:
    return run_property(REGISTRY[id_], cases, seed)
