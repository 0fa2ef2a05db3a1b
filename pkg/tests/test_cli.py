import json
import subprocess
import sys

import pytest

from quiversing.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_roots_count(capsys):
    code, out, _ = run(["roots", "--type", "E8", "--count"], capsys)
    assert code == 0 and json.loads(out) == {"count": 240}


def test_classify_two_a1(capsys):
    code, out, err = run(["classify", "--type", "A3", "--tau", "0,1,0"], capsys)
    js = json.loads(out)
    assert code == 0 and err == ""
    assert [sp["type"] for sp in js["singular"]] == ["A1", "A1"]
    assert js["regular_nonempty"] is True
    assert js["lambda"] == ["-1", "0", "1", "0"]


def test_classify_e8_schema(capsys):
    code, out, _ = run(["classify", "--type", "E8", "--tau", "1,0,0,0,1,1,1,0"], capsys)
    (sp,) = json.loads(out)["singular"]
    assert sp["type"] == "D4"
    assert sp["mckay"] == {"name": "binary dihedral", "order": 8}
    assert sp["slice_delta"] == [1, 1, 2, 1, 1]
    assert {"gamma0", "gammas", "multiplicities", "stabilizer"} <= set(sp)


def test_bordism(capsys):
    code, out, _ = run(["bordism", "--base", "D4", "--parts", "A1,A1,A1"], capsys)
    assert json.loads(out) == {"realizable": True, "witness_J": [1, 3, 4], "lambda": ["-2", "0", "1", "0", "0"]}
    code, out, _ = run(["bordism", "--base", "A2", "--parts", "A1,A1"], capsys)
    assert json.loads(out) == {"realizable": False}
    code, out, _ = run(["bordism", "--base", "A2", "--enumerate"], capsys)
    assert json.loads(out)["configurations"] == [[], ["A1"], ["A2"]]


def test_decompose_and_slice(capsys):
    code, out, _ = run(["decompose", "--type", "A3", "--lambda", "-1,0,1,0"], capsys)
    js = json.loads(out)
    assert [c["type"] for c in js["components"]] == ["A1", "A1"]
    code, out, _ = run(["slice", "--type", "A1", "--tau", "0"], capsys)
    assert json.loads(out)["slices"] == [{"type": "A1", "vertices": [0, 1], "arrows": [[0, 1], [0, 1]], "delta": [1, 1]}]


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--type", "A2", "--lambda", "1,0,0"],
        ["classify", "--type", "A2", "--lambda", "0,0"],
        ["classify", "--type", "A2", "--tau", "1/2x,0"],
        ["classify", "--type", "Q3", "--tau", "0"],
        ["roots", "--type", "D3"],
    ],
)
def test_domain_errors(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 2 and "error" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["classify", "--type", "A2"],
        ["classify", "--type", "A2", "--tau", "0,0", "--lambda", "0,0,0"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 1 and out == ""


def test_verbose_goes_to_stderr(capsys):
    code, out, err = run(["classify", "--type", "A3", "--tau", "0,1,0", "--verbose"], capsys)
    json.loads(out)
    assert "2A1" in err


def test_output_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(["-o", str(path), "roots", "--type", "A2", "--count"], capsys)
    assert out == "" and json.loads(path.read_text()) == {"count": 6}


def test_deterministic(capsys):
    argv = ["classify", "--type", "D6", "--tau", "0,1,0,0,1,0"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_verify_small(capsys):
    code, out, _ = run(["verify", "--types", "A1,A2,D4"], capsys)
    js = json.loads(out)
    assert code == 0 and js["failed"] == 0 and js["passed"] > 0


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "quiversing.cli", "roots", "--type", "A3", "--count"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"count": 12}
