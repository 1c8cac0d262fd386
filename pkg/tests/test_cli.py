from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

from hypertoric.cli import run
from hypertoric.report_io import validate_report_json

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_pi1_atype3():
    code, out, _ = call("pi1", DATA / "atype3.mat")
    assert code == 0 and out == "Z/3\n"


def test_pi1_with_oracle():
    code, out, _ = call("pi1", DATA / "omin222.mat", "--oracle")
    assert code == 0 and out == "Z/2 + Z/2\noracle: agrees\n"
    code, out, _ = call("pi1", DATA / "omin222.mat", "--oracle", "--json")
    assert json.loads(out)["agree"] is True
    code, _, err = call("pi1", DATA / "omin222.mat", "--oracle", "--oracle-bound", "3")
    assert code == 1 and "OracleBoundExceeded" in err


def test_analyze_json_is_valid_and_deterministic():
    code, out, _ = call("analyze", DATA / "omin222.mat", "--json")
    assert code == 0
    obj = json.loads(out)
    validate_report_json(obj)
    assert obj["cover"]["deck"]["order"] == 4
    assert call("analyze", DATA / "omin222.mat", "--json")[1] == out
    assert out == (DATA / "omin222.json").read_text()


def test_analyze_text():
    code, out, _ = call("analyze", DATA / "minnilp3.mat")
    assert code == 0
    assert "dim = 4" in out and "simple: True" in out and "two_form_dim: 1" in out


def test_classify_equal_and_different(tmp_path):
    code, out, _ = call("classify", DATA / "two_a1.mat", DATA / "two_a1.mat")
    assert code == 0 and out.startswith("EQUAL\npermutation: 0 1 2 3")
    permuted = tmp_path / "permuted.mat"
    permuted.write_text("2 4\n0 1 -1 0\n1 0 0 -1\n")
    code, out, _ = call("classify", DATA / "two_a1.mat", permuted)
    assert out.startswith("EQUAL")
    code, out, _ = call("classify", DATA / "atype3.mat", DATA / "minnilp3.mat")
    assert code == 0 and out == "DIFFERENT\n"


def test_validate_gale_simplify_strata(tmp_path):
    assert call("validate", DATA / "atype3.mat")[1] == "VALID (n=3, d=2)\n"
    code, out, _ = call("gale", DATA / "atype3.mat")
    assert out in ("# kind: B\n3 1\n1\n1\n1\n", "# kind: B\n3 1\n-1\n-1\n-1\n")
    code, out, _ = call("simplify", DATA / "omin222.mat")
    assert "multiplicities: 2 2 2" in out
    code, out, _ = call("strata", DATA / "atype3.mat")
    assert "A_2 surface slice" in out
    dual = tmp_path / "b.mat"
    dual.write_text("# kind: B\n3 1\n2\n2\n2\n")
    code, out, _ = call("validate", DATA / "atype3.mat", dual)
    assert code == 1 and "NotSaturated" in out


def test_decompose_cover_generic_moment():
    code, out, _ = call("decompose", DATA / "two_a1.mat")
    assert "r = 2" in out
    code, out, _ = call("cover", DATA / "omin222.mat")
    assert code == 0 and "diagram: OK" in out and "deck group: Z/2 + Z/2" in out
    code, out, _ = call("generic", DATA / "minnilp3.mat", "--alpha", "1")
    assert out.startswith("GENERIC")
    code, out, _ = call("generic", DATA / "minnilp3.mat", "--alpha", "0")
    assert out.startswith("NOT GENERIC")
    code, out, _ = call("moment", DATA / "minnilp3.mat")
    assert out == "z1*w1 + z2*w2 + z3*w3\n"


def test_example_generator(tmp_path):
    target = tmp_path / "a.mat"
    assert call("example", "atype", "3", "-o", target)[0] == 0
    assert target.read_text() == "2 3\n1 0 -1\n0 1 -1\n"
    code, out, _ = call("example", "graph", "0-1", "1-2", "2-0")
    assert code == 0 and out.startswith("2 3\n")
    code, _, err = call("example", "omin", "2")
    assert code == 1 and "BadParams" in err


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("1 3\n2 1 1\n")
    code, out, err = call("pi1", bad)
    assert code == 1 and out == "" and "NotUnimodular" in err
    code, _, err = call("pi1", bad, "--json")
    assert json.loads(err)["error"] == "NotUnimodular"
    ragged = tmp_path / "ragged.mat"
    ragged.write_text("2 3\n1 1 1\n1 1\n")
    code, _, err = call("analyze", ragged, "--json")
    assert code == 1 and json.loads(err)["line"] == 3
    assert call("pi1", tmp_path / "missing.mat")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("generic", DATA / "minnilp3.mat", "--alpha", "x")[0] == 2
    assert call("generic", DATA / "minnilp3.mat", "--alpha", "1,2")[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypertoric.cli", "pi1", str(DATA / "atype3.mat")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "Z/3\n"
