"""Deterministic SVG drawings of planar scenes."""
from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from . import linalg as la
from .space import GeometryError, Line, Plane, Point, Ray, Segment
from .transforms import project_plane

SIZE = 400
DIGITS = 3


class ProjectionError(GeometryError):
    pass


def _coords(p: Plane, X: Point) -> tuple[float, float]:
    u, w = p.basis()
    d = X - p.base
    return (float(la.dot(d, u)) / math.sqrt(la.norm2(u)),
            float(la.dot(d, w)) / math.sqrt(la.norm2(w)))


def _num(x: float) -> str:
    s = f"{x:.{DIGITS}f}"
    return "0.000" if s == "-0.000" else s


def _clip(x0, y0, dx, dy, box, t_min=-math.inf):
    """Liang-Barsky clip of x0 + t*(dx, dy), t >= t_min, to the box."""
    xmin, ymin, xmax, ymax = box
    lo, hi = t_min, math.inf
    for p, q in ((-dx, x0 - xmin), (dx, xmax - x0), (-dy, y0 - ymin), (dy, ymax - y0)):
        if p == 0:
            if q < 0:
                return None
            continue
        t = q / p
        if p < 0:
            lo = max(lo, t)
        else:
            hi = min(hi, t)
    if lo > hi or math.isinf(lo) or math.isinf(hi):
        return None
    return (x0 + lo * dx, y0 + lo * dy, x0 + hi * dx, y0 + hi * dy)


def _flatten(obj, plane: Plane, project: bool):
    def pt(X: Point) -> Point:
        if plane.contains(X):
            return X
        if project:
            return project_plane(X, plane)
        raise ProjectionError(f"{X} is off the drawing plane; add a projection directive")

    if isinstance(obj, Point):
        return pt(obj)
    if isinstance(obj, Segment):
        return Segment(pt(obj.A), pt(obj.B))
    if isinstance(obj, Ray):
        O, T = pt(obj.origin), pt(obj.through)
        return Ray(O, T) if O != T else O
    if isinstance(obj, Line):
        A, B = pt(obj.base), pt(obj.at(1))
        return Line(A, B - A) if A != B else A
    return None


def render_svg(objects: Iterable[tuple[str, object]], plane: Plane, project: bool = False) -> str:
    """SVG text for the named points, segments, rays and lines."""
    items = []
    for name, obj in objects:
        flat = _flatten(obj, plane, project)
        if flat is not None:
            items.append((name, flat))

    anchors = []
    for _, obj in items:
        if isinstance(obj, Point):
            anchors.append(obj)
        elif isinstance(obj, Segment):
            anchors += [obj.A, obj.B]
        elif isinstance(obj, Ray):
            anchors.append(obj.origin)
        elif isinstance(obj, Line):
            anchors.append(obj.base)
    xy = [_coords(plane, X) for X in anchors] or [(0.0, 0.0)]
    xs, ys = [p[0] for p in xy], [p[1] for p in xy]
    w, h = max(xs) - min(xs), max(ys) - min(ys)
    pad_x = 0.1 * w if w > 0 else 1.0
    pad_y = 0.1 * h if h > 0 else 1.0
    box = (min(xs) - pad_x, min(ys) - pad_y, max(xs) + pad_x, max(ys) + pad_y)
    span = max(box[2] - box[0], box[3] - box[1])
    k = SIZE / span

    def tx(x, y):
        return (x - box[0]) * k, (box[3] - y) * k

    width = (box[2] - box[0]) * k
    height = (box[3] - box[1]) * k
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" '
           f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">']
    style = 'stroke="black" stroke-width="1.5" fill="none"'
    for name, obj in items:
        if isinstance(obj, Segment):
            (x1, y1), (x2, y2) = tx(*_coords(plane, obj.A)), tx(*_coords(plane, obj.B))
            out.append(f'<line id="{name}" x1="{_num(x1)}" y1="{_num(y1)}" '
                       f'x2="{_num(x2)}" y2="{_num(y2)}" {style}/>')
        elif isinstance(obj, (Line, Ray)):
            if isinstance(obj, Ray):
                P0, P1 = obj.origin, obj.through
            else:
                P0, P1 = obj.base, obj.at(1)
            x0, y0 = _coords(plane, P0)
            x1, y1 = _coords(plane, P1)
            seg = _clip(x0, y0, x1 - x0, y1 - y0, box, 0.0 if isinstance(obj, Ray) else -math.inf)
            if seg is None:
                continue
            (a, b), (c, d) = tx(seg[0], seg[1]), tx(seg[2], seg[3])
            out.append(f'<line id="{name}" x1="{_num(a)}" y1="{_num(b)}" '
                       f'x2="{_num(c)}" y2="{_num(d)}" stroke="gray" stroke-width="1" '
                       f'stroke-dasharray="4 3" fill="none"/>')
    for name, obj in items:
        if isinstance(obj, Point):
            x, y = tx(*_coords(plane, obj))
            out.append(f'<circle id="{name}" cx="{_num(x)}" cy="{_num(y)}" r="3" fill="black"/>')
            out.append(f'<text x="{_num(x + 5)}" y="{_num(y - 5)}" font-size="12">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(objects: Iterable[tuple[str, object]], plane: Plane, path=None,
             project: bool = False) -> str:
    text = render_svg(objects, plane, project)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
