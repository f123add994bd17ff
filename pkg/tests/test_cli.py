import io
import json

import pytest

from reconalg.cli import run
from reconalg.invariant_ring import RingPresentation
from reconalg.quiver import QuiverPresentation


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_fraction():
    assert _run("fraction", "12", "7") == (0, "[2,4,2] / dual [3,2,3] / dim 5\n")
    code, text = _run("fraction", "12", "7", "--json")
    assert json.loads(text)["versal_dimension"] == 5


def test_quiver_3_1_json():
    code, text = _run("quiver", "3", "1", "--format", "json")
    assert code == 0
    data = json.loads(text)
    assert len(data["vertices"]) == 2
    pairs = [(a["src"], a["dst"]) for a in data["arrows"]]
    assert pairs.count((0, 1)) == 2 and pairs.count((1, 0)) == 3
    assert QuiverPresentation.from_dict(data).to_dict() == data


def test_ring_json_round_trip():
    code, text = _run("ring", "12", "7", "--json")
    data = json.loads(text)
    assert RingPresentation.from_dict(data).to_dict() == data


def test_verify_2_1():
    code, text = _run("verify", "2", "1")
    assert code == 0 and "7/7 checks passed" in text


def test_golden():
    code, text = _run("golden", "D5_2")
    assert code == 0 and "FAIL" not in text
    code, text = _run("golden", "nonquotient_minus4", "--lambda", "5/3", "--json")
    assert code == 0 and json.loads(text)["passed"]


def test_golden_failure_exit_code(tmp_path):
    from reconalg.fixtures import FIXTURE_DIR

    for p in FIXTURE_DIR.glob("*.txt"):
        (tmp_path / p.name).write_text(p.read_text().replace("X1 - t2*t2'", "X1 - t2*t1'"))
    code, text = _run("golden", "D5_2", "--fixtures-dir", str(tmp_path))
    assert code == 1 and "FAIL" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("fraction", "4", "2"),
        ("fraction", "12"),
        ("fraction", "x", "1"),
        ("frobnicate",),
        ("golden", "D5_2", "--lambda", "banana"),
        ("golden", "nonquotient_minus4", "--lambda", "1"),
        ("quiver", "5", "2", "--format", "svg"),
    ],
)
def test_usage_errors(argv, capsys):
    assert _run(*argv)[0] == 2


def test_bound_exhausted(capsys):
    assert _run("quiver", "12", "7", "--bound", "3")[0] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("modules", "12", "7"),
        ("quiver", "5", "2", "--deformed", "--format", "dot"),
        ("ring", "7", "3", "--deformed"),
    ],
)
def test_deterministic(argv):
    first = _run(*argv)
    assert first[0] == 0
    assert _run(*argv) == first


def test_modules_text():
    code, text = _run("modules", "12", "7")
    assert "M1 = (x^7,y)  grading (1,7)  reps (Z0,Z1)" in text


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "reconalg", "fraction", "12", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout == "[3,2,3] / dual [2,4,2] / dim 5\n"
