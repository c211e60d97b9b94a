"""Isometries generated by reflections in rational planes, plus homotheties
and similarities.

Every :class:`Isometry` keeps its reflection word next to the exact affine
form ``X -> M X + t``; the two are kept coherent at construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import linalg as la
from .numeric import QuadraticValue, DyadicInterval, dyadic_approx, fmt_rational, is_square, exact_sqrt, as_rational
from .space import (GeometryError, Line, Plane, Point, PreconditionError, ORIGIN)


class NotExactError(GeometryError):
    """The requested motion leaves the rational group."""


def _reflection_affine(p: Plane) -> tuple[la.Mat, la.Vec]:
    n = p.normal
    k = Fraction(2) / la.norm2(n)
    M = la.mat_sub(la.identity(), la.mat_scale(k, la.outer(n, n)))
    t = la.scale(k * p.offset, n)
    return M, t


def _cancel(word: Sequence[Plane]) -> tuple[Plane, ...]:
    out: list[Plane] = []
    for p in word:
        if out and out[-1] == p:
            out.pop()
        else:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Isometry:
    """``z_{w[0]} o z_{w[1]} o ... o z_{w[-1]}`` with cached affine form."""

    word: tuple
    matrix: la.Mat = field(repr=False)
    t: la.Vec = field(repr=False)

    @classmethod
    def from_word(cls, word: Sequence[Plane]) -> Isometry:
        word = _cancel(word)
        M, t = la.identity(), la.ZERO
        for p in reversed(word):
            R, s = _reflection_affine(p)
            M, t = la.matmul(R, M), la.add(la.matvec(R, t), s)
        return cls(word, M, t)

    @classmethod
    def from_affine(cls, M: la.Mat, t: la.Vec) -> Isometry:
        """Rebuild a reflection word for an orthogonal rational matrix.

        Householder steps send the columns back to the basis; the
        translation is appended as a pair of parallel planes.
        """
        M = tuple(tuple(as_rational(x) for x in r) for r in M)
        if la.matmul(la.transpose(M), M) != la.identity():
            raise GeometryError("matrix is not orthogonal")
        A = M
        lin: list[Plane] = []
        for i in range(3):
            e = la.vec(*(int(i == j) for j in range(3)))
            col = tuple(A[r][i] for r in range(3))
            if col != e:
                p = Plane(ORIGIN, la.sub(col, e))
                R, _ = _reflection_affine(p)
                A = la.matmul(R, A)
                lin.append(p)
        word = tuple(_translation_word(tuple(as_rational(x) for x in t))) + tuple(lin)
        f = cls.from_word(word)
        assert f.matrix == M and f.t == tuple(t)
        return f

    def __call__(self, X: Point) -> Point:
        return self.apply(X)

    def apply(self, X: Point) -> Point:
        return Point(*la.add(la.matvec(self.matrix, X.vec), self.t))

    def apply_word(self, X: Point) -> Point:
        """Apply the reflections one by one (independent of the cache)."""
        for p in reversed(self.word):
            X = reflect_point(X, p)
        return X

    def linear(self, v: la.Vec) -> la.Vec:
        return la.matvec(self.matrix, v)

    @property
    def det(self) -> Fraction:
        return la.det(self.matrix)

    @property
    def is_identity(self) -> bool:
        return self.matrix == la.identity() and la.is_zero(self.t)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.matrix == other.matrix and self.t == other.t

    def __hash__(self):
        return hash((self.matrix, self.t))

    def __matmul__(self, other: Isometry) -> Isometry:
        return compose(self, other)

    def to_json(self) -> dict:
        return {
            "word": [str(p) for p in self.word],
            "matrix": [[fmt_rational(x) for x in r] for r in self.matrix],
            "t": [fmt_rational(x) for x in self.t],
        }


IDENTITY = Isometry((), la.identity(), la.ZERO)


def identity() -> Isometry:
    return IDENTITY


def reflect_point(X: Point, p: Plane) -> Point:
    n = p.normal
    k = 2 * p.value(X) / la.norm2(n)
    return X + la.scale(-k, n)


def reflect_plane(p: Plane) -> Isometry:
    return Isometry.from_word((p,))


def _perp_dirs(d: la.Vec) -> tuple[la.Vec, la.Vec]:
    axes = [la.vec(*e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    n1 = next(la.cross(d, e) for e in axes if not la.is_zero(la.cross(d, e)))
    return n1, la.cross(d, n1)


def reflect_line(a: Line) -> Isometry:
    """Half-turn about a: reflections in two perpendicular planes through a."""
    n1, n2 = _perp_dirs(a.direction)
    return Isometry.from_word((Plane(a.base, n1), Plane(a.base, n2)))


def inversion(O: Point) -> Isometry:
    """Central symmetry X -> 2O - X."""
    return Isometry.from_word(tuple(Plane(O, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))))


def _translation_word(v: la.Vec) -> tuple[Plane, ...]:
    if la.is_zero(v):
        return ()
    return (Plane(ORIGIN + la.scale(Fraction(1, 2), v), v), Plane(ORIGIN, v))


def translation(v) -> Isometry:
    v = tuple(as_rational(x) for x in v)
    return Isometry.from_word(_translation_word(v))


def _perp_component(a: Line, X: Point) -> la.Vec:
    foot = a.at(a.param(X))
    return X - foot


def half_plane_plane(axis: Line, H: Point) -> Plane:
    """The plane through the axis containing H."""
    u = _perp_component(axis, H)
    if la.is_zero(u):
        raise PreconditionError("on-axis", f"{H} lies on the axis")
    return Plane(axis.base, la.cross(axis.direction, u))


def _bisector_normal(axis: Line, H: Point, K: Point) -> la.Vec:
    uh = _perp_component(axis, H)
    uk = _perp_component(axis, K)
    if la.is_zero(uh) or la.is_zero(uk):
        raise PreconditionError("on-axis", "half-plane points must lie off the axis")
    d = axis.direction
    if la.proportional(uh, uk) and la.dot(uh, uk) < 0:
        return uh
    ratio2 = la.norm2(uh) / la.norm2(uk)
    if not is_square(ratio2):
        raise NotExactError("rotation bisector is irrational; use rotation_enclosure()")
    w = la.add(uh, la.scale(exact_sqrt(ratio2), uk))
    return la.cross(d, w)


def rotation(axis: Line, H: Point, K: Point) -> Isometry:
    """Rotation about ``axis`` taking the half-plane through H onto the one
    through K, as the word [bisector plane, plane of H]."""
    beta = half_plane_plane(axis, H)
    alpha = Plane(axis.base, _bisector_normal(axis, H, K))
    return Isometry.from_word((alpha, beta))


def rotation_enclosure(axis: Line, H: Point, K: Point, m: int) -> tuple[list[list[QuadraticValue]], list[list[DyadicInterval]]]:
    """Linear part of a rotation whose bisector is irrational.

    Entries lie in Q(sqrt(r)) with r = |u_h|^2 / |u_k|^2 and are returned
    both exactly and as order-m enclosures.  The result is not an
    :class:`Isometry`: it never re-enters the exact group.
    """
    uh = _perp_component(axis, H)
    uk = _perp_component(axis, K)
    if la.is_zero(uh) or la.is_zero(uk):
        raise PreconditionError("on-axis", "half-plane points must lie off the axis")
    d = axis.direction
    r = la.norm2(uh) / la.norm2(uk)
    a = la.cross(d, uh)
    b = la.cross(d, uk)
    # bisector normal a + rho*b, rho = sqrt(r); entries of I - 2 w w^T/|w|^2
    # are (P + rho Q)/(D0 + rho D1) = X + rho Y
    D0 = la.norm2(a) + r * la.norm2(b)
    D1 = 2 * la.dot(a, b)
    den = D0 * D0 - r * D1 * D1
    Ma = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            P = a[i] * a[j] + r * b[i] * b[j]
            Q = a[i] * b[j] + a[j] * b[i]
            X = (P * D0 - r * Q * D1) / den
            Y = (Q * D0 - P * D1) / den
            Ma[i][j] = (Fraction(int(i == j)) - 2 * X, -2 * Y)
    Mb, _ = _reflection_affine(half_plane_plane(axis, H))
    exact = []
    for i in range(3):
        row = []
        for j in range(3):
            X = sum((Ma[i][k][0] * Mb[k][j] for k in range(3)), Fraction(0))
            Y = sum((Ma[i][k][1] * Mb[k][j] for k in range(3)), Fraction(0))
            row.append(QuadraticValue(X, Y * Y * r, -1 if Y < 0 else 1))
        exact.append(row)
    return exact, [[dyadic_approx(q, m) for q in row] for row in exact]


def compose(f: Isometry, g: Isometry) -> Isometry:
    """f o g (g first)."""
    word = _cancel(f.word + g.word)
    M = la.matmul(f.matrix, g.matrix)
    t = la.add(la.matvec(f.matrix, g.t), f.t)
    return Isometry(word, M, t)


def invert(f: Isometry) -> Isometry:
    Mt = la.transpose(f.matrix)
    return Isometry(tuple(reversed(f.word)), Mt, la.scale(-1, la.matvec(Mt, f.t)))


def apply(f: Isometry, X: Point) -> Point:
    return f.apply(X)


def parity(f: Isometry) -> str:
    return "even" if f.det == 1 else "odd"


def word_parity(f: Isometry) -> str:
    return "even" if len(f.word) % 2 == 0 else "odd"


def conjugate(f: Isometry, g: Isometry) -> Isometry:
    return compose(compose(f, g), invert(f))


def image_plane(f: Isometry, p: Plane) -> Plane:
    return Plane(f.apply(p.base), f.linear(p.normal))


def image_line(f: Isometry, a: Line) -> Line:
    return Line(f.apply(a.base), f.linear(a.direction))


# --- fixed points and classification ----------------------------------------

def fixed_set(f: Isometry) -> Union[None, Point, Line, Plane, str]:
    """Stable points of f: None, a point, a line, a plane or "space"."""
    A = la.mat_sub(f.matrix, la.identity())
    sol = la.solve(A, la.scale(-1, f.t))
    if sol is None:
        return None
    x, basis = sol
    P = Point(*x)
    if not basis:
        return P
    if len(basis) == 1:
        return Line(P, basis[0])
    if len(basis) == 2:
        return Plane(P, la.cross(*basis))
    return "space"


def eigenspace(M: la.Mat, lam: int) -> list[la.Vec]:
    return la.nullspace(la.mat_sub(M, la.mat_scale(lam, la.identity())))


@dataclass(frozen=True)
class Classification:
    kind: str
    parity: str
    axis: Optional[Line] = None
    plane: Optional[Plane] = None


def classify_about(g: Isometry, O: Point) -> Classification:
    """Classify a generalized rotation about O (g(O) = O) by the exact
    eigenspaces of its matrix."""
    if g.apply(O) != O:
        raise GeometryError(f"{O} is not a stable point")
    M = g.matrix
    if g.det == 1:
        if M == la.identity():
            return Classification("identity", "even")
        (d,) = eigenspace(M, 1)
        return Classification("rotation", "even", axis=Line(O, d))
    minus = eigenspace(M, -1)
    plus = eigenspace(M, 1)
    if len(minus) == 3:
        return Classification("inversion", "odd")
    if len(plus) == 2:
        return Classification("reflection", "odd", plane=Plane(O, minus[0]))
    return Classification("reflection-rotation", "odd", axis=Line(O, minus[0]),
                          plane=Plane(O, minus[0]))


def decompose(f: Isometry, O: Point = ORIGIN) -> tuple[Isometry, Isometry, Classification]:
    """Write f = g o p with p a translation and g(O) = O."""
    v = la.matvec(la.transpose(f.matrix), f.apply(O) - O)
    p = translation(v)
    g = compose(f, invert(p))
    return g, p, classify_about(g, O)


# --- projections -------------------------------------------------------------

def project_line(X: Point, a: Line) -> Point:
    return a.at(a.param(X))


def project_plane(X: Point, p: Plane) -> Point:
    return X + la.scale(-p.value(X) / la.norm2(p.normal), p.normal)


# --- similarities ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Similarity:
    """``h_{kO} o tail``: X -> O + k (tail(X) - O)."""

    center: Point
    k: Fraction
    tail: Isometry = IDENTITY

    def __post_init__(self):
        k = as_rational(self.k)
        if k == 0:
            raise GeometryError("homothety factor must be nonzero")
        object.__setattr__(self, "k", k)

    @property
    def affine(self) -> tuple[la.Mat, la.Vec]:
        M = la.mat_scale(self.k, self.tail.matrix)
        c = la.add(la.scale(1 - self.k, self.center.vec), la.scale(self.k, self.tail.t))
        return M, c

    def apply(self, X: Point) -> Point:
        Y = self.tail.apply(X)
        return self.center + la.scale(self.k, Y - self.center)

    __call__ = apply

    def __eq__(self, other):
        if isinstance(other, Isometry):
            other = Similarity(self.center, 1, other)
        if not isinstance(other, Similarity):
            return NotImplemented
        return self.affine == other.affine

    __hash__ = None

    def to_json(self) -> dict:
        return {"center": str(self.center), "k": fmt_rational(self.k), "tail": self.tail.to_json()}


def homothety(O: Point, k) -> Similarity:
    return Similarity(O, k)


def sim_apply(f: Similarity, X: Point) -> Point:
    return f.apply(X)


def sim_compose(f: Similarity, g: Similarity) -> Similarity:
    """f o g, normalised to a homothety about f's center after an isometry."""
    Mf, cf = f.affine
    Mg, cg = g.affine
    k = f.k * g.k
    M = la.matmul(f.tail.matrix, g.tail.matrix)
    c = la.add(la.matvec(Mf, cg), cf)
    O = f.center
    s = la.scale(1 / k, la.sub(c, la.scale(1 - k, O.vec)))
    return Similarity(O, k, Isometry.from_affine(M, s))
