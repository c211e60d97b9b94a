"""The analytic model over rational coordinates: points, flats and the exact
order predicates (betweenness, sides, Pasch, monotonic sequences, angles,
parallelism)."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from . import linalg as la
from .numeric import as_rational, fmt_rational


class GeometryError(ValueError):
    """A construction or predicate was called outside its preconditions."""


class DegenerateError(GeometryError):
    pass


class PreconditionError(GeometryError):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("x", "y", "z"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))

    @classmethod
    def of(cls, v) -> Point:
        return cls(*v)

    @property
    def vec(self) -> la.Vec:
        return (self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.vec)

    def __sub__(self, other: Point) -> la.Vec:
        return la.sub(self.vec, other.vec)

    def __add__(self, v) -> Point:
        return Point(*la.add(self.vec, tuple(v)))

    def __lt__(self, other: Point) -> bool:
        return self.vec < other.vec

    def __str__(self) -> str:
        return "(" + ", ".join(fmt_rational(c) for c in self.vec) + ")"


ORIGIN = Point(0, 0, 0)


def _vec_str(v) -> str:
    return "(" + ", ".join(fmt_rational(c) for c in v) + ")"


@dataclass(frozen=True)
class Line:
    """Line in canonical form: primitive direction, base on a coordinate
    plane, so equal point sets give equal fields."""

    base: Point
    direction: la.Vec

    def __post_init__(self):
        d = la.primitive(tuple(as_rational(c) for c in self.direction))
        i = next(k for k in range(3) if d[k] != 0)
        t = -self.base.vec[i] / d[i]
        object.__setattr__(self, "direction", d)
        object.__setattr__(self, "base", self.base + la.scale(t, d))

    def contains(self, P: Point) -> bool:
        return la.is_zero(la.cross(P - self.base, self.direction))

    def at(self, t) -> Point:
        return self.base + la.scale(as_rational(t), self.direction)

    def param(self, P: Point) -> Fraction:
        return la.dot(P - self.base, self.direction) / la.norm2(self.direction)

    def __str__(self) -> str:
        return f"line({self.base}; {_vec_str(self.direction)})"


@dataclass(frozen=True)
class Plane:
    base: Point
    normal: la.Vec

    def __post_init__(self):
        n = la.primitive(tuple(as_rational(c) for c in self.normal))
        i = next(k for k in range(3) if n[k] != 0)
        c = la.dot(n, self.base.vec)
        b = [Fraction(0)] * 3
        b[i] = c / n[i]
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "base", Point(*b))

    @property
    def offset(self) -> Fraction:
        return la.dot(self.normal, self.base.vec)

    def value(self, P: Point) -> Fraction:
        return la.dot(self.normal, P.vec) - self.offset

    def contains(self, P: Point) -> bool:
        return self.value(P) == 0

    def contains_line(self, a: Line) -> bool:
        return self.contains(a.base) and la.dot(self.normal, a.direction) == 0

    def basis(self) -> tuple[la.Vec, la.Vec]:
        """Two rational in-plane directions, the second = normal x first."""
        n = self.normal
        axes = [la.vec(*e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        # prefer a coordinate axis lying in the plane
        u = next((e for e in axes if la.dot(n, e) == 0), None)
        if u is None:
            u = next(la.cross(n, e) for e in axes if not la.is_zero(la.cross(n, e)))
        return u, la.cross(n, u)

    def __str__(self) -> str:
        return f"plane({self.base}; {_vec_str(self.normal)})"


@dataclass(frozen=True, eq=False)
class Segment:
    A: Point
    B: Point

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return {self.A, self.B} == {other.A, other.B}

    def __hash__(self):
        return hash(frozenset((self.A, self.B)))

    @property
    def degenerate(self) -> bool:
        return self.A == self.B

    @property
    def vector(self) -> la.Vec:
        return self.B - self.A

    def length2(self) -> Fraction:
        return la.norm2(self.B - self.A)

    def contains(self, P: Point, closed: bool = True) -> bool:
        if P == self.A or P == self.B:
            return closed
        return between(self.A, P, self.B)

    def midpoint(self) -> Point:
        return Point(*la.scale(Fraction(1, 2), la.add(self.A.vec, self.B.vec)))

    def __str__(self) -> str:
        return f"seg({self.A}, {self.B})"


@dataclass(frozen=True)
class Ray:
    origin: Point
    through: Point

    def __post_init__(self):
        if self.origin == self.through:
            raise DegenerateError("ray needs two distinct points")

    @property
    def direction(self) -> la.Vec:
        return self.through - self.origin

    @property
    def line(self) -> Line:
        return Line(self.origin, self.direction)

    def contains(self, P: Point) -> bool:
        v = P - self.origin
        return la.is_zero(la.cross(v, self.direction)) and la.dot(v, self.direction) >= 0

    def same_ray(self, other: Ray) -> bool:
        return self.origin == other.origin and other.contains(self.through)

    def __str__(self) -> str:
        return f"ray({self.origin}, {self.through})"


@dataclass(frozen=True)
class Angle:
    """Angle formed by two rays from a common vertex.

    ``straight`` is set when the sides are opposite rays; such an angle does
    not fix a plane on its own.
    """

    vertex: Point
    side1: Ray
    side2: Ray
    straight: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.side1.origin != self.vertex or self.side2.origin != self.vertex:
            raise GeometryError("angle sides must start at the vertex")
        u, v = self.side1.direction, self.side2.direction
        if la.proportional(u, v):
            if la.dot(u, v) > 0:
                raise DegenerateError("zero angle: the sides coincide")
            object.__setattr__(self, "straight", True)
        else:
            object.__setattr__(self, "straight", False)

    @classmethod
    def at(cls, A: Point, O: Point, B: Point) -> Angle:
        """The angle AOB with vertex O."""
        return cls(O, Ray(O, A), Ray(O, B))

    @property
    def plane(self) -> Plane:
        if self.straight:
            raise GeometryError("a straight angle does not determine a plane")
        return plane_through(self.vertex, self.side1.through, self.side2.through)

    def contains_interior(self, X: Point) -> bool:
        """X strictly inside: on the side of each side-line containing the
        other side."""
        if self.straight:
            raise GeometryError("interior of a straight angle needs a half-plane")
        pl = self.plane
        if not pl.contains(X):
            return False
        O, A, B = self.vertex, self.side1.through, self.side2.through
        la_ = line_through(O, A)
        lb = line_through(O, B)
        return (side_of_line(X, la_, pl) == side_of_line(B, la_, pl)
                and side_of_line(X, lb, pl) == side_of_line(A, lb, pl))

    def __str__(self) -> str:
        return f"angle({self.side1.through}, {self.vertex}, {self.side2.through})"


# --- basic predicates --------------------------------------------------------

def collinear(*pts: Point) -> bool:
    pts = list(dict.fromkeys(pts))
    if len(pts) <= 2:
        return True
    A, B = pts[0], pts[1]
    return all(la.is_zero(la.cross(B - A, P - A)) for P in pts[2:])


def coplanar(*pts: Point) -> bool:
    pts = list(dict.fromkeys(pts))
    if len(pts) <= 3:
        return True
    for A, B, C in combinations(pts, 3):
        if not collinear(A, B, C):
            pl = plane_through(A, B, C)
            return all(pl.contains(P) for P in pts)
    return True


def between(A: Point, B: Point, C: Point) -> bool:
    """(A > B < C): A, B, C distinct, collinear, B interior to [AC]."""
    if A == B or B == C or A == C:
        return False
    u, v = B - A, C - A
    if not la.is_zero(la.cross(u, v)):
        return False
    i = next(k for k in range(3) if v[k] != 0)
    return 0 < u[i] / v[i] < 1


def line_through(A: Point, B: Point) -> Line:
    if A == B:
        raise DegenerateError("line_through needs two distinct points")
    return Line(A, B - A)


def plane_through(A: Point, B: Point, C: Point) -> Plane:
    n = la.cross(B - A, C - A)
    if la.is_zero(n):
        raise DegenerateError("plane_through needs three non-collinear points")
    return Plane(A, n)


def side_of_plane(P: Point, pl: Plane) -> int:
    return _sgn(pl.value(P))


def side_of_line(P: Point, a: Line, context: Plane) -> int:
    """Side of P relative to a inside the plane ``context``; orientation is
    fixed by the plane's canonical normal."""
    if not context.contains(P):
        raise PreconditionError("point-off-plane", f"{P} not in {context}")
    if not context.contains_line(a):
        raise PreconditionError("line-off-plane", f"{a} not in {context}")
    return _sgn(la.det3(context.normal, a.direction, P - a.base))


def segment_crosses_plane(A: Point, B: Point, pl: Plane) -> bool:
    """Closed segment [AB] meets the plane."""
    return side_of_plane(A, pl) * side_of_plane(B, pl) <= 0


# --- intersections -----------------------------------------------------------

def intersect_lines(a: Line, b: Line) -> Optional[Point]:
    """Single common point of two distinct lines, else None."""
    if a == b:
        raise GeometryError("lines coincide")
    sol = la.solve([[a.direction[i], -b.direction[i]] for i in range(3)],
                   [b.base.vec[i] - a.base.vec[i] for i in range(3)])
    if sol is None:
        return None
    (s, _t), _ = sol
    return a.at(s)


def intersect_line_plane(a: Line, pl: Plane) -> Optional[Point]:
    dn = la.dot(pl.normal, a.direction)
    if dn == 0:
        return None
    t = -pl.value(a.base) / dn
    return a.at(t)


def intersect_planes(p: Plane, q: Plane) -> Optional[Line]:
    sol = la.solve([p.normal, q.normal], [p.offset, q.offset])
    if sol is None:
        return None
    x, basis = sol
    if len(basis) != 1:
        raise GeometryError("planes coincide")
    return Line(Point(*x), basis[0])


def segment_hits_line(A: Point, B: Point, a: Line, closed: bool = False) -> Optional[Point]:
    """Point where a meets the segment (open unless ``closed``)."""
    if A == B:
        return None
    ab = line_through(A, B)
    if ab == a:
        return None
    X = intersect_lines(ab, a)
    if X is None:
        return None
    if X == A or X == B:
        return X if closed else None
    return X if between(A, X, B) else None


# --- Pasch -------------------------------------------------------------------

def pasch_witness(A: Point, B: Point, C: Point, l: Line) -> tuple[str, Point]:
    """Which of (AC), (BC) a line crossing (AB) leaves the triangle through."""
    if collinear(A, B, C):
        raise PreconditionError("collinear", "A, B, C are collinear")
    pl = plane_through(A, B, C)
    if not pl.contains_line(l):
        raise PreconditionError("line-off-plane", "l is not in the triangle's plane")
    for name, P in (("A", A), ("B", B), ("C", C)):
        if l.contains(P):
            raise PreconditionError("through-vertex", f"l passes through {name}")
    if segment_hits_line(A, B, l) is None:
        raise PreconditionError("misses-AB", "l does not cross (AB)")
    hits = [(name, X) for name, (P, Q) in (("AC", (A, C)), ("BC", (B, C)))
            if (X := segment_hits_line(P, Q, l)) is not None]
    if len(hits) != 1:
        raise AssertionError(f"Pasch violated: {hits}")
    return hits[0]


# --- monotonic sequences -----------------------------------------------------

def is_monotonic(seq: list[Point]) -> bool:
    n = len(seq)
    return all(between(seq[i], seq[j], seq[k])
               for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))


def monotonic_order(points: Iterable[Point]) -> list[Point]:
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise PreconditionError("duplicates", "points must be pairwise distinct")
    if len(pts) < 2:
        return pts
    if not collinear(*pts):
        raise PreconditionError("non-collinear", "points are not collinear")
    a = line_through(pts[0], pts[1])
    out = sorted(pts, key=a.param)
    return out if out[0] < out[-1] else out[::-1]


# --- angles ------------------------------------------------------------------

def ray_in_angle(r: Ray, ang: Angle, method: str = "chord") -> bool:
    """Whether r runs through the interior of a proper angle."""
    if r.origin != ang.vertex:
        raise PreconditionError("origin-mismatch", "ray does not start at the vertex")
    if ang.straight:
        raise PreconditionError("straight", "interior of a straight angle is a half-plane")
    pl = ang.plane
    if not pl.contains(r.through):
        raise PreconditionError("out-of-plane", "ray is not in the angle's plane")
    if method == "chord":
        A, B = ang.side1.through, ang.side2.through
        X = segment_hits_line(A, B, r.line)
        return X is not None and r.contains(X)
    if method == "halfplane":
        return ang.contains_interior(r.through)
    raise ValueError(f"unknown method {method!r}")


# --- parallelism -------------------------------------------------------------

def lines_coplanar(a: Line, b: Line) -> bool:
    return la.det3(b.base - a.base, a.direction, b.direction) == 0


def parallel_lines(a: Line, b: Line, method: str = "definition") -> bool:
    if method == "direction":
        return a.direction == b.direction
    if a == b:
        return True
    return lines_coplanar(a, b) and intersect_lines(a, b) is None


def parallel_line_plane(a: Line, pl: Plane, method: str = "definition") -> bool:
    if method == "direction":
        return la.dot(a.direction, pl.normal) == 0
    return pl.contains_line(a) or intersect_line_plane(a, pl) is None


def parallel_planes(p: Plane, q: Plane, method: str = "definition") -> bool:
    if method == "direction":
        return p.normal == q.normal
    if p == q:
        return True
    try:
        return intersect_planes(p, q) is None
    except GeometryError:
        return True


def perpendicular(u: la.Vec, v: la.Vec) -> bool:
    return la.dot(u, v) == 0


def parallel_through(a: Line, P: Point) -> Line:
    return Line(P, a.direction)
