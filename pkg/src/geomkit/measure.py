"""Coordinates on a line, lengths and angle measures through dyadic
enclosures, and the algebra of free vectors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import linalg as la
from .congruence import angle_shape
from .numeric import (DEFAULT_ORDER, Dyadic, DyadicInterval, QuadraticValue, arccos_enclose,
                      archimedes_bound, as_rational, dyadic_approx, fmt_rational, pi_enclose,
                      separate, sqrt_enclose)
from .space import (Angle, DegenerateError, GeometryError, Line, Point, PreconditionError,
                    Segment, between, collinear, line_through, monotonic_order, segment_hits_line)
from .transforms import Isometry, translation

PI = "pi"


@dataclass(frozen=True)
class LineFrame:
    """Cartesian coordinate system on the line OE with unit segment [OE]."""

    origin: Point
    unit: Point

    def __post_init__(self):
        if self.origin == self.unit:
            raise DegenerateError("frame needs O != E")

    @property
    def e(self) -> la.Vec:
        return self.unit - self.origin

    @property
    def line(self) -> Line:
        return line_through(self.origin, self.unit)

    @property
    def unit2(self) -> Fraction:
        return la.norm2(self.e)

    def point(self, xi) -> Point:
        return self.origin + la.scale(as_rational(xi), self.e)

    def __str__(self) -> str:
        return f"frame({self.origin}, {self.unit})"


@dataclass(frozen=True, eq=False)
class Measurement:
    kind: str  # "coordinate" | "length" | "angle"
    exact: Union[Fraction, QuadraticValue, str, None]
    enclosure: Optional[DyadicInterval]
    m: int
    unit: str
    cos: Optional[QuadraticValue] = None

    def interval(self, m: Optional[int] = None) -> DyadicInterval:
        """Enclosure usable in interval sums; the pi tag is widened here."""
        m = self.m if m is None else m
        if self.exact == PI:
            return pi_enclose(m)
        return self.enclosure

    def to_json(self) -> dict:
        if isinstance(self.exact, QuadraticValue):
            exact = self.exact.to_json()
        elif isinstance(self.exact, Fraction):
            exact = fmt_rational(self.exact)
        else:
            exact = self.exact
        out = {"kind": self.kind, "exact": exact,
               "enclosure": self.enclosure.to_json() if self.enclosure else None,
               "m": self.m, "unit": self.unit}
        if self.cos is not None:
            out["cos"] = self.cos.to_json()
        return out


def coordinate(X: Point, frame: LineFrame, m: int = DEFAULT_ORDER) -> Measurement:
    if not frame.line.contains(X):
        raise PreconditionError("off-line", f"{X} is not on the frame's line")
    xi = la.dot(X - frame.origin, frame.e) / frame.unit2
    return Measurement("coordinate", xi, dyadic_approx(xi, m), m, str(frame))


def length_ratio2(P: Point, Q: Point, frame: LineFrame) -> Fraction:
    if P == Q:
        raise DegenerateError("length of a degenerate segment")
    return la.norm2(Q - P) / frame.unit2


def length(P: Point, Q: Point, frame: LineFrame, m: int = DEFAULT_ORDER) -> Measurement:
    r2 = length_ratio2(P, Q, frame)
    return Measurement("length", QuadraticValue.sqrt(r2), sqrt_enclose(r2, m), m, str(frame))


def gauge_length(P: Point, Q: Point, frame: LineFrame, m: int) -> DyadicInterval:
    """Count how many copies of [OE]/2^m fit into [PQ] (exact squared
    comparisons, exponential then binary search on the count)."""
    r2 = length_ratio2(P, Q, frame)
    scale = Fraction(4) ** m

    def fits(k: int) -> bool:
        return k * k <= r2 * scale

    hi = 1
    while fits(hi):
        hi *= 2
    lo = hi // 2 if hi > 1 else 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if fits(mid):
            lo = mid
        else:
            hi = mid
    return DyadicInterval(Dyadic(lo, m), Dyadic(lo + 1, m), m)


def archimedes_count(P: Point, Q: Point, frame: LineFrame) -> int:
    """n with [PQ] < n*[OE]."""
    return archimedes_bound(QuadraticValue.sqrt(length_ratio2(P, Q, frame)))


def bisection_order_below(P: Point, Q: Point, frame: LineFrame) -> int:
    """An order m with |OE| / 2^m < |PQ|."""
    return separate(Fraction(0), QuadraticValue.sqrt(length_ratio2(P, Q, frame))) + 1


def angle_measure(a: Angle, m: int = DEFAULT_ORDER) -> Measurement:
    shape = angle_shape(a)
    if shape.straight:
        return Measurement("angle", PI, None, m, "rad", shape.cos)
    return Measurement("angle", None, arccos_enclose(shape.cos, m), m, "rad", shape.cos)


def frame_map(f1: LineFrame, f2: LineFrame):
    """Line similarity sending the point with coordinate x in f1 to the point
    with the same coordinate in f2."""
    def f(X: Point) -> Point:
        return f2.point(coordinate(X, f1, 0).exact)
    return f


# --- free vectors -------------------------------------------------------------

@dataclass(frozen=True)
class FreeVector:
    components: la.Vec

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(as_rational(c) for c in self.components))

    def __add__(self, other: FreeVector) -> FreeVector:
        return vec_add(self, other)

    def __neg__(self) -> FreeVector:
        return vec_scale(-1, self)

    def __sub__(self, other: FreeVector) -> FreeVector:
        return vec_add(self, -other)

    def __rmul__(self, k) -> FreeVector:
        return vec_scale(k, self)

    @property
    def norm2(self) -> Fraction:
        return la.norm2(self.components)

    @property
    def is_zero(self) -> bool:
        return la.is_zero(self.components)

    def __str__(self) -> str:
        return "<" + ", ".join(fmt_rational(c) for c in self.components) + ">"


ZERO_VECTOR = FreeVector(la.ZERO)


def vec(A: Point, B: Point) -> FreeVector:
    return FreeVector(B - A)


def vec_add(u: FreeVector, v: FreeVector) -> FreeVector:
    return FreeVector(la.add(u.components, v.components))


def vec_scale(k, u: FreeVector) -> FreeVector:
    return FreeVector(la.scale(as_rational(k), u.components))


def _segments_meet(A: Point, B: Point, C: Point, D: Point) -> bool:
    """Closed segments [AB] and [CD] share a point (coplanar inputs)."""
    if A == B:
        return Segment(C, D).contains(A)
    if C == D:
        return Segment(A, B).contains(C)
    if collinear(A, B, C, D):
        return any(Segment(A, B).contains(X) for X in (C, D)) or \
            any(Segment(C, D).contains(X) for X in (A, B))
    return segment_hits_line(A, B, line_through(C, D), closed=True) is not None and \
        segment_hits_line(C, D, line_through(A, B), closed=True) is not None


def codirected(u: Segment, v: Segment, method: str = "definition") -> bool:
    """Whether the directed segments A->B and C->D point the same way."""
    if u.degenerate or v.degenerate:
        raise DegenerateError("codirected needs non-degenerate representatives")
    A, B, C, D = u.A, u.B, v.A, v.B
    if method == "analytic":
        a, b = u.vector, v.vector
        return la.proportional(a, b) and la.dot(a, b) > 0
    if collinear(A, B, C, D):
        seq = monotonic_order(dict.fromkeys((A, B, C, D)))
        idx = {P: i for i, P in enumerate(seq)}
        s1 = idx[B] - idx[A]
        s2 = idx[D] - idx[C]
        return (s1 > 0) == (s2 > 0)
    if not la.proportional(u.vector, v.vector):
        return False
    # distinct parallel lines: codirected iff [BD] misses [AC]
    return not _segments_meet(B, D, A, C)


def translation_of_vector(u: FreeVector) -> Isometry:
    return translation(u.components)


def vector_of_translation(f: Isometry) -> FreeVector:
    if f.matrix != la.identity():
        raise GeometryError("not a parallel translation")
    return FreeVector(f.t)
