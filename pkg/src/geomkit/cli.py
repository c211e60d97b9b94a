"""Command-line front end: ``geomkit check-incidence | axioms | run | measure``.

Exit status is 0 iff every check passes, 1 if something fails and 2 for
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import incidence
from .dsl import ParseError, parse, exec_script
from .measure import LineFrame, angle_measure, length
from .numeric import DEFAULT_ORDER, fmt_rational, parse_rational
from .space import Angle, GeometryError, Point
from .suite import GROUPS, run_axiom_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(data: dict, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _point(text: str) -> Point:
    parts = [p for p in text.strip("() ").split(",")]
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected x,y[,z] rationals, got {text!r}")
    try:
        return Point(*(parse_rational(p) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad point {text!r}: {exc}") from None


# --- subcommands -----------------------------------------------------------------

def cmd_check_incidence(args) -> int:
    model = incidence.load_model(args.file)
    ids = incidence.AXIOM_IDS if args.axioms is None else tuple(args.axioms.split(","))
    unknown = [i for i in ids if i not in incidence.AXIOM_IDS]
    if unknown:
        print(f"error: unknown axiom ids {unknown}", file=sys.stderr)
        return EXIT_USAGE
    run_theorems = args.theorems or args.axioms is None
    axioms = incidence.check_axioms(model, ids)
    theorems, note = [], ""
    if run_theorems:
        try:
            theorems = incidence.check_incidence_theorems(model)
        except incidence.AxiomsNotSatisfied as exc:
            note = f"theorems not checked: {exc}"
    passed = all(r.passed for r in axioms + theorems) and not note
    data = {"schema": 1, "model": str(args.file), "passed": passed,
            "axioms": [r.to_json() for r in axioms],
            "theorems": [r.to_json() for r in theorems], "notes": [note] if note else []}
    lines = []
    for r in axioms + theorems:
        lines.append(f"{r.id:7} {'pass' if r.passed else 'FAIL'}")
        for w in r.to_json()["witnesses"]:
            lines.append(f"        witness {w}")
    if note:
        lines.append(note)
    lines.append("all checks pass" if passed else "some checks fail")
    _emit(data, args.json, lines)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_axioms(args) -> int:
    try:
        rep = run_axiom_suite(args.model, args.cases, args.seed, groups=args.group,
                              workers=args.workers)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = []
    for r in rep.results:
        lines.append(f"{r.group:11} {r.id:18} {r.cases - r.failures}/{r.cases} "
                     f"{'pass' if r.passed else 'FAIL'}")
        for w in r.witnesses:
            lines.append(f"    witness {w}")
    lines += rep.notes
    lines.append("all properties pass" if rep.passed else "some properties fail")
    _emit(rep.to_json(), args.json, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_run(args) -> int:
    path = Path(args.script)
    try:
        script = parse(path.read_text(encoding="utf-8"))
    except ParseError as exc:
        print(f"{path}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    rep = exec_script(script, args.precision)
    if args.svg is not None:
        if not rep.emits:
            print("error: --svg needs an 'emit svg' directive in the script", file=sys.stderr)
            return EXIT_USAGE
        out = Path(args.svg)
        if out.is_dir():
            rep.write_emits(out)
        else:
            out.write_text(rep.emits[-1][1], encoding="utf-8")
    lines = []
    for s in rep.statements:
        extra = s.value or s.message
        lines.append(f"{s.line:4}: {s.status:5} {s.text}" + (f"  -> {extra}" if extra else ""))
    lines += [f"note: {n}" for n in rep.notes]
    c = rep.counts
    lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['error']} errors")
    _emit(rep.to_json(), args.json, lines)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_measure(args) -> int:
    m = args.precision
    try:
        if args.len is not None:
            O, E = args.unit
            meas = length(args.len[0], args.len[1], LineFrame(O, E), m)
        else:
            A, O, B = args.angle
            meas = angle_measure(Angle.at(A, O, B), m)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data = {"schema": 1, **meas.to_json()}
    iv = meas.interval()
    lines = [f"{meas.kind} in [{fmt_rational(iv.lo.value)}, {fmt_rational(iv.hi.value)}]"
             f" ~ [{float(iv.lo):.12g}, {float(iv.hi):.12g}] at order {m}"]
    if meas.exact is not None:
        exact = meas.exact if isinstance(meas.exact, str) else str(meas.exact)
        lines.append(f"exact: {exact}")
    _emit(data, args.json, lines)
    return EXIT_OK


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="geomkit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-incidence", help="check a finite incidence model file")
    p.add_argument("file")
    p.add_argument("--axioms", help="comma-separated axiom ids (default: all)")
    p.add_argument("--theorems", action="store_true",
                   help="also check the incidence theorems Th1.1-Th1.6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check_incidence)

    p = sub.add_parser("axioms", help="run the property suite")
    p.add_argument("--model", default="analytic", help="'analytic' or a model file")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--group", action="append", choices=GROUPS,
                   help="restrict to a group (repeatable)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_axioms)

    p = sub.add_parser("run", help="run a construction script")
    p.add_argument("script")
    p.add_argument("--precision", type=int, default=DEFAULT_ORDER)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="OUT",
                   help="write the last emitted drawing to OUT (or every drawing into a directory)")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("measure", help="length or angle enclosure")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--len", nargs=2, type=_point, metavar=("P", "Q"))
    g.add_argument("--angle", nargs=3, type=_point, metavar=("A", "O", "B"))
    p.add_argument("--unit", nargs=2, type=_point, metavar=("O", "E"),
                   default=(Point(0, 0, 0), Point(1, 0, 0)))
    p.add_argument("--precision", type=int, default=DEFAULT_ORDER)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_measure)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OSError, incidence.MalformedModel) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
