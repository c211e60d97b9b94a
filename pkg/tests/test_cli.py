import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from geomkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_incidence_exit_codes(capsys):
    code, out, _ = run(capsys, "check-incidence", str(FIXTURES / "canonical.model"), "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["passed"]
    assert [t["id"] for t in data["theorems"]] == ["Th1.1", "Th1.2", "Th1.3", "Th1.4", "Th1.5", "Th1.6"]
    code, out, _ = run(capsys, "check-incidence", str(FIXTURES / "corrupted.model"))
    assert code == 1 and "witness" in out


def test_check_incidence_axiom_subset(capsys):
    code, out, _ = run(capsys, "check-incidence", str(FIXTURES / "corrupted.model"),
                       "--axioms", "A1,A3", "--json")
    data = json.loads(out)
    assert code == 0 and [a["id"] for a in data["axioms"]] == ["A1", "A3"] and not data["theorems"]
    code, _, err = run(capsys, "check-incidence", str(FIXTURES / "canonical.model"), "--axioms", "A99")
    assert code == 2 and "A99" in err


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "check-incidence", str(tmp_path / "nope.model"))
    assert code == 2 and "error" in err


def test_axioms_command(capsys):
    code, out, _ = run(capsys, "axioms", "--cases", "5", "--seed", "3", "--group", "vectors", "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["cases"] == 5
    assert {r["group"] for r in data["results"]} == {"vectors"}
    code, _, err = run(capsys, "axioms", "--model", "no-such-model")
    assert code == 2


def test_axioms_on_model_files(capsys):
    assert run(capsys, "axioms", "--model", str(FIXTURES / "canonical.model"))[0] == 0
    code, out, _ = run(capsys, "axioms", "--model", str(FIXTURES / "corrupted.model"))
    assert code == 1 and "witness" in out


@pytest.mark.parametrize("name", ["midpoint", "angle_sum", "parallelogram"])
def test_run_passing_scripts(capsys, name):
    code, out, _ = run(capsys, "run", str(FIXTURES / f"{name}.geo"), "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1 and data["passed"]


def test_run_failing_script(capsys, tmp_path):
    p = tmp_path / "bad.geo"
    p.write_text("point A = (0,0,0)\npoint B = (1,0,0)\nassert equal A B\n")
    code, out, _ = run(capsys, "run", str(p))
    assert code == 1 and "0 passed, 1 failed" in out


def test_run_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.geo"
    p.write_text("point A = (1/0,0,0)\n")
    code, _, err = run(capsys, "run", str(p))
    assert code == 2 and f"{p}:1:12:" in err


def test_run_svg_output(capsys, tmp_path):
    out = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "run", str(FIXTURES / "midsegment.geo"), "--svg", str(out))
    first = out.read_text()
    assert code == 0 and first.count("<line") == 6
    run(capsys, "run", str(FIXTURES / "midsegment.geo"), "--svg", str(out))
    assert out.read_text() == first
    run(capsys, "run", str(FIXTURES / "midsegment.geo"), "--svg", str(tmp_path))
    assert (tmp_path / "midsegment.svg").read_text() == first
    code, _, err = run(capsys, "run", str(FIXTURES / "midpoint.geo"), "--svg", str(out))
    assert code == 2 and "emit" in err


def test_measure_command(capsys):
    code, out, _ = run(capsys, "measure", "--len", "0,0,0", "3,0,0", "--json")
    assert code == 0 and json.loads(out)["exact"] == {"base": "3/1", "sign": 1, "radicand": "0/1"}
    code, out, _ = run(capsys, "measure", "--angle", "1,0", "0,0", "(-1,0)")
    assert code == 0 and "exact: pi" in out
    code, _, err = run(capsys, "measure", "--len", "0,0", "0,0")
    assert code == 2


def test_bad_point_argument(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["measure", "--len", "0,0,0", "1/0,0"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "geomkit", "check-incidence",
                          str(FIXTURES / "corrupted.model")], capture_output=True, text=True)
    assert res.returncode == 1
