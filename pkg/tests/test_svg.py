import pytest

from conftest import FIXTURES
from geomkit.dsl import run_text
from geomkit.space import Line, Plane, Point, Ray, Segment
from geomkit.svg import ProjectionError, emit_svg, render_svg

O = Point(0, 0, 0)
Z0 = Plane(O, (0, 0, 1))


def test_one_segment_one_line_element():
    svg = render_svg([("s", Segment(O, Point(1, 1, 0)))], Z0)
    assert svg.count("<line") == 1
    assert svg.startswith("<svg") or svg.startswith("<?xml")


def test_output_is_byte_identical():
    objs = [("A", O), ("B", Point(3, 1, 0)), ("s", Segment(O, Point(3, 1, 0))),
            ("a", Line(O, (1, 2, 0))), ("r", Ray(Point(1, 0, 0), Point(2, 2, 0)))]
    assert render_svg(objs, Z0) == render_svg(list(objs), Z0)


def test_midsegment_figure_has_six_segments():
    rep = run_text((FIXTURES / "midsegment.geo").read_text())
    (emit, svg), = rep.emits
    assert emit.path == "midsegment.svg"
    assert svg.count("<line") == 6 and svg.count("<circle") == 6
    assert svg == run_text((FIXTURES / "midsegment.geo").read_text()).emits[0][1]


def test_lines_are_clipped_to_viewport():
    svg = render_svg([("A", O), ("B", Point(1, 1, 0)), ("a", Line(O, (1, 0, 0)))], Z0)
    assert svg.count("<line") == 1
    assert "-1e" not in svg and "inf" not in svg


def test_off_plane_objects_need_projection():
    objs = [("A", O), ("B", Point(1, 1, 5))]
    with pytest.raises(ProjectionError):
        render_svg(objs, Z0)
    assert render_svg(objs, Z0, project=True).count("<circle") == 2


def test_emit_writes_file(tmp_path):
    path = tmp_path / "out.svg"
    text = emit_svg([("s", Segment(O, Point(1, 0, 0)))], Z0, path)
    assert path.read_text() == text


def test_off_plane_emit_is_a_statement_error():
    rep = run_text("point A = (0,0,0)\npoint B = (0,0,4)\npoint C = (1,0,0)\n"
                   "plane p = plane(A, C, (0,1,0))\nemit svg x.svg plane p\n"
                   "emit svg y.svg plane p project\n")
    assert [s.status for s in rep.statements[-2:]] == ["error", "ok"]
