"""Construction scripts: a line-oriented language over the kernel.

::

    point A = (0, 0, 0)
    point M = midpoint(A, B)
    r = bisector(angle(B, A, C))~20
    assert congruent seg(A, M) seg(M, B)
    emit svg out.svg plane P
"""
from __future__ import annotations

import re
from pathlib import Path
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import linalg as la
from .congruence import angle_congruent, angle_less, angle_shape, seg_congruent, seg_less
from .measure import (PI, LineFrame, Measurement, angle_measure, coordinate, length)
from .numeric import (DEFAULT_ORDER, DyadicInterval, QuadraticValue, as_rational, compare,
                      encloses_pi, exact_sqrt, fmt_rational, is_square, sqrt_enclose)
from .space import (Angle, GeometryError, Line, Plane, Point, Ray, Segment, between,
                    collinear, intersect_line_plane, intersect_lines, line_through,
                    parallel_line_plane, parallel_lines, parallel_planes, plane_through)
from .svg import render_svg
from .transforms import (Isometry, Similarity, compose, homothety, inversion, invert,
                         project_line, project_plane, reflect_line, reflect_plane, rotation,
                         translation)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, token: str = ""):
        super().__init__(f"{line}:{col}: {message}" + (f" (at {token!r})" if token else ""))
        self.message = message
        self.line = line
        self.col = col
        self.token = token


# --- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Tuple:
    items: tuple


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    approx: Optional[int] = None


Expr = Union[Num, Name, Tuple, Call]


@dataclass(frozen=True)
class Let:
    kind: Optional[str]
    name: str
    expr: Expr
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assert:
    pred: str
    args: tuple
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Emit:
    fmt: str
    path: str
    plane: str
    line: int = field(default=0, compare=False)
    project: bool = False


@dataclass(frozen=True)
class Script:
    statements: tuple


# name -> allowed arities
CONSTRUCTIONS: dict[str, tuple[int, ...]] = {
    "line": (2,), "plane": (3,), "ray": (2,), "segment": (2,), "seg": (2,),
    "angle": (3,), "midpoint": (1, 2), "bisector": (1, 2), "perp_at": (2, 3),
    "perp_from": (2,), "perp_bisector_plane": (2,), "parallel_through": (2,),
    "project_line": (2,), "project_plane": (2,), "intersect": (2,),
    "reflect": (1,), "rotate": (3,), "translate": (1, 2), "invert": (1,),
    "homothety": (2,), "apply": (2,), "compose": (2,), "frame": (2,),
    "measure_len": (2, 3), "measure_angle": (1,), "coordinate": (2,),
}

PREDICATES: dict[str, tuple[int, ...]] = {
    "congruent": (2,), "less": (2,), "between": (3,), "parallel": (2,),
    "perpendicular": (2,), "collinear": (3, 4, 5, 6), "equal": (2,), "on": (2,),
    "right": (1,), "within": (3,), "sum_pi": (1, 2, 3, 4, 5, 6),
    "len_ratio": (3,), "len_sum": (3, 4, 5, 6),
}

KINDS = {"point", "line", "plane", "ray", "segment", "angle", "frame", "isometry",
         "similarity", "measure"}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t]+)
  | (?P<num>-?\d+(?:/-?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),=~])
""", re.VERBOSE)


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(text: str, lineno: int) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", lineno, pos + 1, text[pos])
        if m.lastgroup != "ws":
            toks.append(_Tok(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok], lineno: int, defined: set):
        self.toks = toks
        self.i = 0
        self.lineno = lineno
        self.defined = defined

    def peek(self) -> Optional[_Tok]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def error(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.peek()
        col = tok.col if tok else (self.toks[-1].col + len(self.toks[-1].text) if self.toks else 1)
        raise ParseError(msg, self.lineno, col, tok.text if tok else "")

    def next(self) -> _Tok:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of line")
        self.i += 1
        return tok

    def expect(self, text: str) -> _Tok:
        tok = self.next()
        if tok.text != text:
            self.error(f"expected {text!r}", tok)
        return tok

    def done(self) -> bool:
        return self.i >= len(self.toks)

    def number(self, tok: _Tok) -> Num:
        num, _, den = tok.text.partition("/")
        if den and int(den) == 0:
            self.error("zero denominator", tok)
        if den and int(den) < 0:
            self.error("negative denominator", tok)
        return Num(Fraction(int(num), int(den) if den else 1))

    def expr(self) -> Expr:
        tok = self.next()
        if tok.kind == "num":
            return self.number(tok)
        if tok.text == "(":
            items = [self.expr()]
            while self.peek() is not None and self.peek().text == ",":
                self.next()
                items.append(self.expr())
            self.expect(")")
            return Tuple(tuple(items))
        if tok.kind == "name":
            nxt = self.peek()
            # a call needs the parenthesis glued to the name
            if nxt is not None and nxt.text == "(" and nxt.col == tok.col + len(tok.text):
                return self.call(tok)
            if tok.text not in self.defined:
                self.error(f"use of undeclared name {tok.text!r}", tok)
            return Name(tok.text)
        self.error("unexpected token", tok)

    def call(self, fn: _Tok) -> Call:
        if fn.text not in CONSTRUCTIONS:
            self.error(f"unknown construction {fn.text!r}", fn)
        self.expect("(")
        args = []
        if self.peek() is not None and self.peek().text == ")":
            self.next()
        else:
            args.append(self.expr())
            while self.peek() is not None and self.peek().text == ",":
                self.next()
                args.append(self.expr())
            self.expect(")")
        if len(args) not in CONSTRUCTIONS[fn.text]:
            self.error(f"{fn.text} takes {' or '.join(map(str, CONSTRUCTIONS[fn.text]))} "
                       f"arguments, got {len(args)}", fn)
        approx = None
        if self.peek() is not None and self.peek().text == "~":
            self.next()
            tok = self.next()
            if tok.kind != "num" or "/" in tok.text or int(tok.text) < 0:
                self.error("precision suffix must be a non-negative integer", tok)
            approx = int(tok.text)
        return Call(fn.text, tuple(args), approx)


def parse(text: str) -> Script:
    statements = []
    defined: set = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        stripped = body.lstrip()
        if stripped.startswith("emit"):
            statements.append(_parse_emit(body, lineno, defined))
            continue
        toks = _tokenize(body, lineno)
        p = _Parser(toks, lineno, defined)
        head = p.peek()
        if head.text == "assert":
            p.next()
            pred = p.next()
            if pred.text not in PREDICATES:
                p.error(f"unknown predicate {pred.text!r}", pred)
            args = []
            while not p.done():
                args.append(p.expr())
            if len(args) not in PREDICATES[pred.text]:
                p.error(f"{pred.text} takes {' or '.join(map(str, PREDICATES[pred.text]))} "
                        f"arguments, got {len(args)}", pred)
            statements.append(Assert(pred.text, tuple(args), lineno))
            continue
        kind = None
        if head.kind == "name" and head.text in KINDS and len(toks) > 1 and toks[1].kind == "name":
            kind = p.next().text
        name_tok = p.next()
        if name_tok.kind != "name":
            p.error("expected a name", name_tok)
        if name_tok.text in defined:
            p.error(f"duplicate name {name_tok.text!r}", name_tok)
        p.expect("=")
        expr = p.expr()
        if not p.done():
            p.error("trailing tokens")
        if isinstance(expr, Tuple) and kind not in (None, "point"):
            p.error("a coordinate tuple declares a point", name_tok)
        defined.add(name_tok.text)
        statements.append(Let(kind, name_tok.text, expr, lineno))
    return Script(tuple(statements))


def _parse_emit(body: str, lineno: int, defined: set) -> Emit:
    parts = body.split()
    col = body.index("emit") + 1
    if len(parts) not in (5, 6) or parts[1] != "svg" or parts[3] != "plane" \
            or parts[5:] not in ([], ["project"]):
        raise ParseError("expected 'emit svg PATH plane NAME [project]'", lineno, col, body.strip())
    if parts[4] not in defined:
        raise ParseError(f"use of undeclared name {parts[4]!r}", lineno,
                         body.rindex(parts[4]) + 1, parts[4])
    return Emit(parts[1], parts[2], parts[4], lineno, len(parts) == 6)


# --- printing ----------------------------------------------------------------

def print_expr(e: Expr) -> str:
    if isinstance(e, Num):
        q = e.value
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Tuple):
        return "(" + ", ".join(print_expr(x) for x in e.items) + ")"
    s = f"{e.fn}(" + ", ".join(print_expr(x) for x in e.args) + ")"
    return s + (f"~{e.approx}" if e.approx is not None else "")


def print_script(script: Script) -> str:
    out = []
    for st in script.statements:
        if isinstance(st, Let):
            prefix = f"{st.kind} " if st.kind else ""
            out.append(f"{prefix}{st.name} = {print_expr(st.expr)}")
        elif isinstance(st, Assert):
            out.append(" ".join(["assert", st.pred] + [print_expr(a) for a in st.args]))
        else:
            out.append(f"emit {st.fmt} {st.path} plane {st.plane}" + (" project" if st.project else ""))
    return "\n".join(out) + "\n"


# --- values ------------------------------------------------------------------

@dataclass(frozen=True)
class ApproxRay:
    """A ray whose direction is only known to a dyadic tolerance."""

    origin: Point
    direction: la.Vec
    order: int

    tolerance: Fraction = Fraction(0)

    def __str__(self) -> str:
        d = ", ".join(f"{float(c):.6g}" for c in self.direction)
        return f"~ray({self.origin}; ({d}))@{self.order}"

    def to_json(self) -> dict:
        return {"origin": str(self.origin),
                "direction": [fmt_rational(c) for c in self.direction],
                "order": self.order, "tolerance": fmt_rational(self.tolerance)}


class ScriptError(Exception):
    """Statement-level failure; execution continues with the next statement."""


def _kind_of(v) -> str:
    for cls, k in ((Point, "point"), (Line, "line"), (Plane, "plane"), (Ray, "ray"),
                   (Segment, "segment"), (Angle, "angle"), (LineFrame, "frame"),
                   (Isometry, "isometry"), (Similarity, "similarity"),
                   (Measurement, "measure"), (ApproxRay, "ray")):
        if isinstance(v, cls):
            return k
    if isinstance(v, Fraction):
        return "number"
    if isinstance(v, tuple):
        return "vector"
    return type(v).__name__


def describe(v) -> str:
    if isinstance(v, Fraction):
        return fmt_rational(v)
    if isinstance(v, tuple):
        return "(" + ", ".join(fmt_rational(c) for c in v) + ")"
    if isinstance(v, Isometry):
        return f"isometry(word={len(v.word)}, det={fmt_rational(v.det)})"
    if isinstance(v, Similarity):
        return f"similarity(center={v.center}, k={fmt_rational(v.k)})"
    if isinstance(v, Measurement):
        if v.exact == PI:
            return "pi"
        if v.exact is not None and not (isinstance(v.exact, QuadraticValue) and not v.exact.is_rational):
            ex = v.exact.to_fraction() if isinstance(v.exact, QuadraticValue) else v.exact
            return f"{fmt_rational(ex)} in {v.enclosure}"
        return f"{v.exact if v.exact is not None else v.kind} in {v.enclosure}"
    return str(v)


def _need(v, cls, what: str):
    if isinstance(v, ApproxRay):
        raise ScriptError(f"approximate value cannot feed an exact {what}")
    if not isinstance(v, cls):
        raise ScriptError(f"{what} expects {getattr(cls, '__name__', cls)}, got {_kind_of(v)}")
    return v


AXES = (la.vec(1, 0, 0), la.vec(0, 1, 0), la.vec(0, 0, 1))


@dataclass
class StatementResult:
    index: int
    line: int
    kind: str
    text: str
    status: str  # "ok" | "pass" | "fail" | "error"
    value: Optional[str] = None
    message: str = ""
    certificate: Optional[dict] = None

    def to_json(self) -> dict:
        out = {"index": self.index, "line": self.line, "kind": self.kind,
               "text": self.text, "status": self.status}
        if self.value is not None:
            out["value"] = self.value
        if self.message:
            out["message"] = self.message
        if self.certificate:
            out["certificate"] = self.certificate
        return out


@dataclass
class RunReport:
    statements: list
    precision: int
    notes: list = field(default_factory=list)
    emits: list = field(default_factory=list)
    env: dict = field(default_factory=dict, repr=False)

    @property
    def counts(self) -> dict:
        out = {"ok": 0, "pass": 0, "fail": 0, "error": 0}
        for s in self.statements:
            out[s.status] += 1
        return out

    @property
    def passed(self) -> bool:
        c = self.counts
        return c["fail"] == 0 and c["error"] == 0

    def to_json(self) -> dict:
        return {"schema": 1, "precision": self.precision,
                "statements": [s.to_json() for s in self.statements],
                "summary": self.counts, "passed": self.passed, "notes": list(self.notes),
                "emits": [st.path for st, _ in self.emits]}

    def write_emits(self, base=".") -> list:
        """Write each emitted drawing relative to ``base``; returns the paths."""
        out = []
        for st, svg in self.emits:
            path = Path(base) / st.path
            path.write_text(svg, encoding="utf-8")
            out.append(path)
        return out


class Interpreter:
    def __init__(self, precision: int = DEFAULT_ORDER):
        self.m = precision
        self.env: dict = {}
        self.notes: list[str] = []

    # evaluation -------------------------------------------------------------

    def eval(self, e: Expr):
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Name):
            if e.id not in self.env:
                raise ScriptError(f"{e.id} is undefined (its statement failed)")
            return self.env[e.id]
        if isinstance(e, Tuple):
            vals = [self.eval(x) for x in e.items]
            if not all(isinstance(v, Fraction) for v in vals) or len(vals) not in (2, 3):
                raise ScriptError("coordinate tuples hold 2 or 3 rationals")
            return tuple(vals) + ((Fraction(0),) if len(vals) == 2 else ())
        args = [self.eval(a) for a in e.args]
        fn = getattr(self, f"c_{e.fn}")
        try:
            return fn(*args, approx=e.approx) if e.fn == "bisector" else fn(*args)
        except GeometryError as exc:
            raise ScriptError(str(exc)) from None
        except ZeroDivisionError as exc:
            raise ScriptError(f"degenerate input ({exc})") from None

    @staticmethod
    def _point(v) -> Point:
        if isinstance(v, tuple):
            return Point(*v)
        return _need(v, Point, "point argument")

    # constructions ----------------------------------------------------------

    def c_line(self, A, B):
        return line_through(self._point(A), self._point(B))

    def c_plane(self, A, B, C):
        return plane_through(self._point(A), self._point(B), self._point(C))

    def c_ray(self, O, A):
        return Ray(self._point(O), self._point(A))

    def c_segment(self, A, B):
        return Segment(self._point(A), self._point(B))

    c_seg = c_segment

    def c_angle(self, A, O, B):
        return Angle.at(self._point(A), self._point(O), self._point(B))

    def c_midpoint(self, A, B=None):
        s = _need(A, Segment, "midpoint") if B is None else Segment(self._point(A), self._point(B))
        return s.midpoint()

    def c_bisector(self, ang, pl=None, approx=None):
        ang = _need(ang, Angle, "bisector")
        O = ang.vertex
        u, v = ang.side1.direction, ang.side2.direction
        if ang.straight:
            if pl is None:
                raise ScriptError("bisector of a straight angle needs a plane argument")
            pl = _need(pl, Plane, "bisector plane")
            if not (pl.contains(O) and pl.contains(ang.side1.through)):
                raise ScriptError("plane does not contain the straight angle")
            return Ray(O, O + la.cross(pl.normal, u))
        r2 = la.norm2(u) / la.norm2(v)
        if is_square(r2):
            return Ray(O, O + la.add(u, la.scale(exact_sqrt(r2), v)))
        if approx is None:
            raise ScriptError("irrational bisector: add a ~m precision suffix")
        iv = sqrt_enclose(r2, approx)
        self.notes.append(f"bisector at {O} approximated at order {approx}")
        # the exact bisector direction is u + rho*v with rho in iv
        return ApproxRay(O, la.add(u, la.scale(iv.lo.value, v)), approx, iv.width)

    def _aux_plane(self, a: Line) -> Plane:
        for e, name in zip(AXES, "xyz"):
            if not la.proportional(e, a.direction):
                self.notes.append(f"auxiliary plane through {a} spanned with the {name}-axis direction")
                return Plane(a.base, la.cross(a.direction, e))
        raise AssertionError

    def c_perp_at(self, a, P, pl=None):
        a = _need(a, Line, "perp_at line")
        P = self._point(P)
        if not a.contains(P):
            raise ScriptError("perp_at: point is not on the line (use perp_from)")
        pl = self._aux_plane(a) if pl is None else _need(pl, Plane, "perp_at plane")
        if not pl.contains_line(a):
            raise ScriptError("perp_at: line is not in the plane")
        return Line(P, la.cross(pl.normal, a.direction))

    def c_perp_from(self, P, a):
        P = self._point(P)
        a = _need(a, Line, "perp_from line")
        if a.contains(P):
            raise ScriptError("perp_from: point lies on the line (use perp_at)")
        return line_through(P, project_line(P, a))

    def c_perp_bisector_plane(self, A, B):
        A, B = self._point(A), self._point(B)
        if A == B:
            raise ScriptError("perp_bisector_plane needs distinct points")
        return Plane(Segment(A, B).midpoint(), B - A)

    def c_parallel_through(self, x, P):
        P = self._point(P)
        if isinstance(x, Plane):
            return Plane(P, x.normal)
        return Line(P, _need(x, Line, "parallel_through").direction)

    def c_project_line(self, X, a):
        return project_line(self._point(X), _need(a, Line, "project_line"))

    def c_project_plane(self, X, p):
        return project_plane(self._point(X), _need(p, Plane, "project_plane"))

    def c_intersect(self, a, b):
        if isinstance(a, Plane) and isinstance(b, Line):
            a, b = b, a
        a = _need(a, Line, "intersect")
        X = intersect_line_plane(a, b) if isinstance(b, Plane) else \
            intersect_lines(a, _need(b, Line, "intersect"))
        if X is None:
            raise ScriptError("no single intersection point")
        return X

    def c_reflect(self, x):
        if isinstance(x, Plane):
            return reflect_plane(x)
        if isinstance(x, Line):
            return reflect_line(x)
        return inversion(self._point(x))

    def c_rotate(self, axis, H, K):
        return rotation(_need(axis, Line, "rotate axis"), self._point(H), self._point(K))

    def c_translate(self, a, b=None):
        if b is None:
            if not isinstance(a, tuple):
                raise ScriptError("translate expects a vector or two points")
            return translation(a)
        return translation(self._point(b) - self._point(a))

    def c_invert(self, x):
        if isinstance(x, Isometry):
            return invert(x)
        return inversion(self._point(x))

    def c_homothety(self, O, k):
        if not isinstance(k, Fraction):
            raise ScriptError("homothety factor must be a rational")
        return homothety(self._point(O), k)

    def c_apply(self, f, X):
        if not isinstance(f, (Isometry, Similarity)):
            raise ScriptError("apply expects an isometry or similarity")
        if isinstance(X, Segment):
            return Segment(f.apply(X.A), f.apply(X.B))
        return f.apply(self._point(X))

    def c_compose(self, f, g):
        return compose(_need(f, Isometry, "compose"), _need(g, Isometry, "compose"))

    def c_frame(self, O, E):
        return LineFrame(self._point(O), self._point(E))

    def c_measure_len(self, a, b, c=None):
        if c is None:
            s = _need(a, Segment, "measure_len")
            frame = _need(b, LineFrame, "measure_len frame")
            return length(s.A, s.B, frame, self.m)
        return length(self._point(a), self._point(b), _need(c, LineFrame, "measure_len frame"), self.m)

    def c_measure_angle(self, ang):
        return angle_measure(_need(ang, Angle, "measure_angle"), self.m)

    def c_coordinate(self, X, frame):
        return coordinate(self._point(X), _need(frame, LineFrame, "coordinate frame"), self.m)

    # predicates ---------------------------------------------------------------

    def p_congruent(self, x, y):
        if isinstance(x, Segment) and isinstance(y, Segment):
            return seg_congruent(x, y), None
        if isinstance(x, Angle) and isinstance(y, Angle):
            return angle_congruent(x, y), None
        raise ScriptError("congruent compares two segments or two angles")

    def p_less(self, x, y):
        if isinstance(x, Segment) and isinstance(y, Segment):
            return seg_less(x, y), None
        if isinstance(x, Angle) and isinstance(y, Angle):
            return angle_less(x, y), None
        raise ScriptError("less compares two segments or two angles")

    def p_between(self, A, B, C):
        return between(self._point(A), self._point(B), self._point(C)), None

    def p_collinear(self, *pts):
        return collinear(*(self._point(P) for P in pts)), None

    def p_parallel(self, x, y):
        if isinstance(x, Plane) and isinstance(y, Line):
            x, y = y, x
        if isinstance(x, Line) and isinstance(y, Line):
            return parallel_lines(x, y), None
        if isinstance(x, Line) and isinstance(y, Plane):
            return parallel_line_plane(x, y), None
        if isinstance(x, Plane) and isinstance(y, Plane):
            return parallel_planes(x, y), None
        raise ScriptError("parallel compares lines and planes")

    def p_perpendicular(self, x, y):
        def direction(v):
            if isinstance(v, (Line, Ray)):
                return "d", v.direction
            if isinstance(v, Segment):
                return "d", v.vector
            if isinstance(v, Plane):
                return "n", v.normal
            raise ScriptError("perpendicular compares lines, segments, rays and planes")
        (kx, u), (ky, v) = direction(x), direction(y)
        if kx == ky == "d":
            ok = la.dot(u, v) == 0
            if isinstance(x, Line) and isinstance(y, Line):
                ok = ok and intersect_lines(x, y) is not None
            return ok, None
        if kx == ky == "n":
            return la.dot(u, v) == 0, None
        return la.proportional(u, v), None

    def p_equal(self, x, y):
        if isinstance(x, tuple):
            x = Point(*x)
        if isinstance(y, tuple):
            y = Point(*y)
        if isinstance(x, ApproxRay) or isinstance(y, ApproxRay):
            raise ScriptError("approximate value cannot feed an exact predicate")
        if isinstance(x, Ray) and isinstance(y, Ray):
            return x.same_ray(y), None
        return x == y, None

    def p_on(self, X, flat):
        X = self._point(X)
        if isinstance(flat, (Line, Plane, Segment, Ray)):
            return flat.contains(X), None
        raise ScriptError("on expects a line, plane, segment or ray")

    def p_right(self, ang):
        return angle_shape(_need(ang, Angle, "right")).kind == "right", None

    def p_within(self, meas, lo, hi):
        meas = _need(meas, Measurement, "within")
        iv = meas.interval()
        ok = compare(lo, iv.lo.value) <= 0 and compare(iv.hi.value, hi) <= 0
        return ok, {"enclosure": iv.to_json()}

    def p_sum_pi(self, *ms):
        total = None
        for meas in ms:
            meas = _need(meas, Measurement, "sum_pi")
            if meas.kind != "angle":
                raise ScriptError("sum_pi adds angle measures")
            iv = meas.interval()
            total = iv if total is None else total + iv
        return encloses_pi(total), {"sum": total.to_json(), "width": fmt_rational(total.width)}

    def _len2(self, s) -> Fraction:
        return _need(s, Segment, "length predicate").length2()

    def p_len_ratio(self, s1, s2, k):
        if not isinstance(k, Fraction):
            raise ScriptError("len_ratio factor must be rational")
        return self._len2(s1) == k * k * self._len2(s2) and k >= 0, None

    def p_len_sum(self, k, s0, *parts):
        """k*|s0| equals the sum of the part lengths (one or two parts)."""
        if not isinstance(k, Fraction) or k < 0:
            raise ScriptError("len_sum factor must be a non-negative rational")
        lhs2 = k * k * self._len2(s0)
        sq = [self._len2(s) for s in parts]
        if len(sq) == 1:
            return lhs2 == sq[0], None
        if len(sq) != 2:
            raise ScriptError("len_sum supports one or two parts")
        # k|s0| = sqrt(a) + sqrt(b)  <=>  lhs2 - a - b = 2 sqrt(ab)
        rhs = QuadraticValue(Fraction(0), 4 * sq[0] * sq[1], 1)
        return rhs == lhs2 - sq[0] - sq[1] and lhs2 >= sq[0] + sq[1], None

    # driver -------------------------------------------------------------------

    def drawable(self) -> list:
        return [(k, v) for k, v in self.env.items() if isinstance(v, (Point, Segment, Line, Ray))]

    def run(self, script: Script) -> RunReport:
        results = []
        emits = []
        for i, st in enumerate(script.statements):
            text = print_script(Script((st,))).strip()
            if isinstance(st, Emit):
                try:
                    svg = render_svg(self.drawable(), _need(self.env.get(st.plane), Plane,
                                                            "emit plane"), st.project)
                except (ScriptError, GeometryError) as exc:
                    results.append(StatementResult(i, st.line, "emit", text, "error",
                                                   message=str(exc)))
                    continue
                emits.append((st, svg))
                results.append(StatementResult(i, st.line, "emit", text, "ok"))
                continue
            try:
                if isinstance(st, Let):
                    if isinstance(st.expr, Tuple):
                        val = Point(*self.eval(st.expr))
                    else:
                        val = self.eval(st.expr)
                    k = _kind_of(val)
                    if st.kind and st.kind != k:
                        raise ScriptError(f"{st.name} declared {st.kind} but is {k}")
                    self.env[st.name] = val
                    cert = val.to_json() if isinstance(val, (Measurement, ApproxRay)) else None
                    results.append(StatementResult(i, st.line, "let", text, "ok",
                                                   describe(val), certificate=cert))
                else:
                    args = [self.eval(a) for a in st.args]
                    try:
                        ok, cert = getattr(self, f"p_{st.pred}")(*args)
                    except GeometryError as exc:
                        raise ScriptError(str(exc)) from None
                    results.append(StatementResult(i, st.line, "assert", text,
                                                   "pass" if ok else "fail", certificate=cert))
            except ScriptError as exc:
                results.append(StatementResult(i, st.line, "let" if isinstance(st, Let) else "assert",
                                               text, "error", message=str(exc)))
        return RunReport(results, self.m, list(self.notes), emits, dict(self.env))


def exec_script(script: Script, precision: int = DEFAULT_ORDER) -> RunReport:
    return Interpreter(precision).run(script)


def run_text(text: str, precision: int = DEFAULT_ORDER) -> RunReport:
    return exec_script(parse(text), precision)
