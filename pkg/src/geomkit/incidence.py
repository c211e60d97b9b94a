"""Finite incidence structures and exhaustive checks of the incidence axioms."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Hashable, Iterable

AXIOM_IDS = tuple(f"A{i}" for i in range(1, 9))
THEOREM_IDS = tuple(f"Th1.{i}" for i in range(1, 7))
DEFAULT_MAX_POINTS = 64


class MalformedModel(ValueError):
    pass


class AxiomsNotSatisfied(ValueError):
    pass


def _label_key(label):
    if isinstance(label, int):
        return (0, label, "")
    return (1, 0, str(label))


def _sorted(labels: Iterable) -> list:
    return sorted(labels, key=_label_key)


@dataclass(frozen=True)
class FiniteIncidenceModel:
    """Points with distinguished subsets called lines and planes.

    ``lines`` and ``planes`` are tuples, so an accidentally repeated line is
    kept (and then caught by A2) instead of silently merged.
    """

    points: frozenset
    lines: tuple[frozenset, ...]
    planes: tuple[frozenset, ...]

    def validate(self, max_points: int = DEFAULT_MAX_POINTS) -> None:
        if len(self.points) > max_points:
            raise MalformedModel(
                f"model has {len(self.points)} points, cap is {max_points}")
        for kind, sets in (("line", self.lines), ("plane", self.planes)):
            for s in sets:
                extra = s - self.points
                if extra:
                    raise MalformedModel(
                        f"{kind} {fmt_set(s)} uses undeclared points {fmt_set(extra)}")

    def collinear(self, pts: Iterable[Hashable]) -> bool:
        pts = set(pts)
        return any(pts <= a for a in self.lines)

    def coplanar(self, pts: Iterable[Hashable]) -> bool:
        pts = set(pts)
        return any(pts <= p for p in self.planes)

    def sorted_points(self) -> list:
        return _sorted(self.points)


def fmt_set(s) -> str:
    return "{" + ",".join(str(x) for x in _sorted(s)) + "}"


@dataclass
class AxiomReport:
    id: str
    passed: bool
    witnesses: list = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        return {"id": self.id, "verdict": "pass" if self.passed else "fail",
                "witnesses": [[_jsonable(w) for w in wit] for wit in self.witnesses],
                "note": self.note}


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return [_jsonable(y) for y in _sorted(x)]
    if isinstance(x, (int, str)):
        return x
    return str(x)


def _report(id_: str, witnesses: list, limit: int, note: str = "") -> AxiomReport:
    return AxiomReport(id_, not witnesses, witnesses[:limit], note)


def canonical_four_point() -> FiniteIncidenceModel:
    pts = frozenset({1, 2, 3, 4})
    lines = tuple(frozenset(c) for c in combinations((1, 2, 3, 4), 2))
    planes = tuple(frozenset(c) for c in combinations((1, 2, 3, 4), 3))
    return FiniteIncidenceModel(pts, lines, planes)


# --- axioms -----------------------------------------------------------------

def _a1(m: FiniteIncidenceModel) -> list:
    return [(a,) for a in _ordered_sets(m.lines) if len(a) < 2]


def _a2(m: FiniteIncidenceModel) -> list:
    out = []
    for A, B in combinations(m.sorted_points(), 2):
        n = sum(1 for a in m.lines if A in a and B in a)
        if n != 1:
            out.append((A, B, f"{n} lines"))
    return out


def _noncollinear_triples(m: FiniteIncidenceModel):
    for t in combinations(m.sorted_points(), 3):
        if not m.collinear(t):
            yield t


def _a3(m: FiniteIncidenceModel) -> list:
    for _ in _noncollinear_triples(m):
        return []
    return [("no non-collinear triple",)]


def _a4(m: FiniteIncidenceModel) -> list:
    out = []
    for t in _noncollinear_triples(m):
        n = sum(1 for p in m.planes if set(t) <= p)
        if n != 1:
            out.append((*t, f"{n} planes"))
    return out


def _a5(m: FiniteIncidenceModel) -> list:
    return [(p,) for p in _ordered_sets(m.planes) if not p]


def _a6(m: FiniteIncidenceModel) -> list:
    out = []
    for a in _ordered_sets(m.lines):
        for p in _ordered_sets(m.planes):
            if len(a & p) >= 2 and not a <= p:
                out.append((a, p))
    return out


def _a7(m: FiniteIncidenceModel) -> list:
    out = []
    for p, q in combinations(_ordered_sets(m.planes), 2):
        if p != q and len(p & q) == 1:
            out.append((p, q))
    return out


def _a8(m: FiniteIncidenceModel) -> list:
    for quad in combinations(m.sorted_points(), 4):
        if not m.coplanar(quad):
            return []
    return [("no non-coplanar quadruple",)]


def _ordered_sets(sets) -> list:
    return sorted(sets, key=lambda s: [_label_key(x) for x in _sorted(s)])


_AXIOMS: dict[str, Callable[[FiniteIncidenceModel], list]] = {
    "A1": _a1, "A2": _a2, "A3": _a3, "A4": _a4,
    "A5": _a5, "A6": _a6, "A7": _a7, "A8": _a8,
}


def check_axiom(model: FiniteIncidenceModel, axiom_id: str, *, limit: int = 10,
                max_points: int = DEFAULT_MAX_POINTS) -> AxiomReport:
    if axiom_id not in _AXIOMS:
        raise KeyError(f"unknown axiom {axiom_id!r}")
    model.validate(max_points)
    return _report(axiom_id, _AXIOMS[axiom_id](model), limit)


def check_axioms(model: FiniteIncidenceModel, ids: Iterable[str] = AXIOM_IDS,
                 **kw) -> list[AxiomReport]:
    return [check_axiom(model, i, **kw) for i in ids]


# --- derived theorems -------------------------------------------------------

def _th11(m):
    out = []
    for a, b in combinations(_ordered_sets(m.lines), 2):
        if a != b and len(a & b) > 1:
            out.append((a, b, f"{len(a & b)} common points"))
    return out


def _th12(m):
    out = []
    for p, q in combinations(_ordered_sets(m.planes), 2):
        common = p & q
        if p != q and common and common not in m.lines:
            out.append((p, q, common))
    return out


def _th13(m):
    out = []
    for a in _ordered_sets(m.lines):
        for C in m.sorted_points():
            if C in a:
                continue
            n = sum(1 for p in m.planes if a <= p and C in p)
            if n != 1:
                out.append((a, C, f"{n} planes"))
    return out


def _th14(m):
    out = []
    for a in _ordered_sets(m.lines):
        for p in _ordered_sets(m.planes):
            if not a <= p and len(a & p) > 1:
                out.append((a, p))
    return out


def _th15(m):
    out = []
    for a, b in combinations(_ordered_sets(m.lines), 2):
        if a != b and a & b:
            n = sum(1 for p in m.planes if a <= p and b <= p)
            if n != 1:
                out.append((a, b, f"{n} planes"))
    return out


def _th16(m):
    out = []
    for p in _ordered_sets(m.planes):
        if not any(not m.collinear(t) for t in combinations(_sorted(p), 3)):
            out.append((p,))
    return out


_THEOREMS = {"Th1.1": _th11, "Th1.2": _th12, "Th1.3": _th13,
             "Th1.4": _th14, "Th1.5": _th15, "Th1.6": _th16}


def check_incidence_theorems(model: FiniteIncidenceModel, *, require_axioms: bool = True,
                             limit: int = 10,
                             max_points: int = DEFAULT_MAX_POINTS) -> list[AxiomReport]:
    """Exhaustively verify theorems Th1.1-Th1.6 on a finite model.

    With ``require_axioms`` the model must pass A1-A8 first; the theorems are
    only claimed under the axioms.
    """
    model.validate(max_points)
    if require_axioms:
        failed = [r.id for r in check_axioms(model, max_points=max_points) if not r.passed]
        if failed:
            raise AxiomsNotSatisfied(f"model fails {', '.join(failed)}")
    return [_report(tid, fn(model), limit) for tid, fn in _THEOREMS.items()]


# --- mutations --------------------------------------------------------------

def mutations(model: FiniteIncidenceModel) -> list[tuple[str, FiniteIncidenceModel]]:
    """Single-edit corruptions: remove a line, drop a point from a plane,
    duplicate a line."""
    out = []
    lines = list(model.lines)
    planes = list(model.planes)
    for i, a in enumerate(lines):
        out.append((f"remove line {fmt_set(a)}",
                    FiniteIncidenceModel(model.points, tuple(lines[:i] + lines[i + 1:]), model.planes)))
    for i, p in enumerate(planes):
        for X in _sorted(p):
            smaller = planes[:i] + [p - {X}] + planes[i + 1:]
            out.append((f"drop {X} from plane {fmt_set(p)}",
                        FiniteIncidenceModel(model.points, model.lines, tuple(smaller))))
    for a in lines:
        out.append((f"duplicate line {fmt_set(a)}",
                    FiniteIncidenceModel(model.points, tuple(lines + [a]), model.planes)))
    return out


# --- text format ------------------------------------------------------------

def _label(tok: str):
    return int(tok) if tok.lstrip("-").isdigit() else tok


def parse_model(text: str) -> FiniteIncidenceModel:
    points: set = set()
    lines: list = []
    planes: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise MalformedModel(f"line {lineno}: expected 'kind: labels'")
        labels = [_label(t) for t in rest.split()]
        key = key.strip()
        if key == "points":
            points.update(labels)
        elif key == "line":
            lines.append(frozenset(labels))
        elif key == "plane":
            planes.append(frozenset(labels))
        else:
            raise MalformedModel(f"line {lineno}: unknown declaration {key!r}")
    return FiniteIncidenceModel(frozenset(points), tuple(lines), tuple(planes))


def load_model(path) -> FiniteIncidenceModel:
    return parse_model(Path(path).read_text(encoding="utf-8"))


def format_model(model: FiniteIncidenceModel) -> str:
    out = ["points: " + " ".join(str(p) for p in model.sorted_points())]
    out += ["line: " + " ".join(str(x) for x in _sorted(a)) for a in model.lines]
    out += ["plane: " + " ".join(str(x) for x in _sorted(p)) for p in model.planes]
    return "\n".join(out) + "\n"
