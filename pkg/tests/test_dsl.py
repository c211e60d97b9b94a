import json

import pytest

from conftest import FIXTURES
from geomkit.dsl import (Assert, Call, Let, Name, ParseError, exec_script, parse, print_script,
                         run_text)
from geomkit.space import Point

SCRIPTS = sorted(FIXTURES.glob("*.geo"))


def test_fixture_corpus_is_complete():
    names = {p.stem for p in SCRIPTS}
    assert {"midpoint", "bisector", "perpendiculars", "parallels", "angle_sum",
            "midsegment", "parallelogram"} <= names


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
def test_fixture_passes(path):
    rep = exec_script(parse(path.read_text()), 20)
    bad = [s for s in rep.statements if s.status in ("fail", "error")]
    assert rep.passed, bad


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
def test_print_parse_round_trip(path):
    script = parse(path.read_text())
    assert parse(print_script(script)) == script


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.stem)
def test_reports_are_deterministic(path):
    text = path.read_text()
    a = json.dumps(run_text(text, 20).to_json())
    b = json.dumps(run_text(text, 20).to_json())
    assert a == b


def test_declaration_nodes():
    s = parse("point A = (0,0,0)\npoint B = (1,0,0)\npoint M = midpoint(A, B)\n")
    assert isinstance(s.statements[0], Let) and s.statements[0].kind == "point"
    assert s.statements[2].expr == Call("midpoint", (Name("A"), Name("B")))


def test_midpoint_value():
    rep = run_text("point A = (0,0,0)\npoint B = (1,0,0)\npoint M = midpoint(A, B)\n"
                   "assert congruent seg(A, M) seg(M, B)\n")
    assert rep.env["M"] == Point("1/2", 0, 0) and rep.passed


@pytest.mark.parametrize("text, where, fragment", [
    ("point A = (1/0,0,0)", (1, 12), "zero denominator"),
    ("point A = (0,0,0)\nB = frob(A)", (2, 5), "unknown construction"),
    ("point A = (0,0,0)\nM = midpoint(A, A, A)", (2, 5), "takes"),
    ("M = midpoint(A, B)", (1, 14), "undeclared"),
    ("point A = (0,0,0)\npoint A = (1,0,0)", (2, 7), "duplicate"),
    ("point A = (0,0,0) $", (1, 19), "unexpected character"),
    ("assert shiny A", (1, 8), "unknown predicate"),
])
def test_parse_errors_carry_positions(text, where, fragment):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert (exc.value.line, exc.value.col) == where
    assert fragment in exc.value.message


def test_failures_do_not_abort():
    rep = run_text("point A = (0,0,0)\npoint B = (1,0,0)\nassert equal A B\n"
                   "point C = midpoint(A, B)\nassert between A C B\n")
    assert [s.status for s in rep.statements] == ["ok", "ok", "fail", "ok", "pass"]
    assert not rep.passed


def test_precondition_errors_are_statement_level():
    rep = run_text("point O = (0,0,0)\npoint X = (1,0,0)\npoint Y = (1,1,0)\n"
                   "r = bisector(angle(X, O, Y))\nassert on O r\n")
    st = rep.statements
    assert st[3].status == "error" and "~" in st[3].message
    assert st[4].status == "error"


def test_approximate_bisector_is_certified():
    rep = run_text("point O = (0,0,0)\npoint X = (1,0,0)\npoint Y = (1,1,0)\n"
                   "r = bisector(angle(X, O, Y))~24\n")
    assert rep.passed
    cert = rep.statements[3].certificate
    assert cert["order"] == 24 and cert["tolerance"] == "1/16777216"


def test_bisector_uniqueness_and_shape():
    rep = run_text("point O = (0,0,0)\npoint X = (3,0,0)\npoint Y = (0,3,0)\n"
                   "ray b = bisector(angle(X, O, Y))\n"
                   "assert congruent angle(X, O, (1,1,0)) angle((1,1,0), O, Y)\n"
                   "assert on (5,5,0) b\n")
    assert rep.passed


def test_auxiliary_plane_is_recorded():
    rep = run_text("point A = (0,0,0)\npoint B = (1,0,0)\nline a = line(A, B)\n"
                   "line p = perp_at(a, A)\nassert perpendicular p a\n")
    assert rep.passed and any("auxiliary" in n for n in rep.notes)


def test_measure_within_claim():
    rep = run_text("point A = (0,0,0)\npoint B = (1,1,0)\nf = frame(A, (1,0,0))\n"
                   "d = measure_len(A, B, f)\n"
                   "assert within d 1414/1000 1415/1000\nassert within d 3/2 2\n")
    assert [s.status for s in rep.statements[-2:]] == ["pass", "fail"]


def test_assert_node_arguments():
    s = parse("point A = (0,0,0)\npoint B = (1,0,0)\npoint C = (2,0,0)\nassert between A B C\n")
    assert s.statements[-1] == Assert("between", (Name("A"), Name("B"), Name("C")))
