import json
import subprocess
import sys

import pytest

from goldie.cli import run_cli
from goldie.pipeline import dumps

from conftest import FIXTURES, GOOD, fixture_path


def run(capsys, *argv):
    code = run_cli([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_rank_instA(capsys):
    code, out, _ = run(capsys, "rank", fixture_path("instA"))
    assert code == 0 and out.strip() == "6"


def test_analyze_refuses_overlapping_spans(capsys):
    code, out, err = run(capsys, "analyze", fixture_path("ass3-false"))
    assert code == 3
    assert "eta3 in span{eta1, eta2}" in err


def test_family_instC_verify(capsys):
    code, out, _ = run(capsys, "--json", "family", fixture_path("instC"), "--xmax", "6", "--verify")
    assert code == 0
    rows = json.loads(out)["table"]
    assert [r["direct"] for r in rows] == [2, 3, 5, 6, 8, 9]
    assert [r["predicted"] for r in rows] == [2, 3, 5, 6, 8, 9]


def test_family_marks_inadmissible_rows(capsys):
    code, out, _ = run(capsys, "--json", "family", fixture_path("inst-half"), "--xmax", "4", "--verify")
    rows = json.loads(out)["table"]
    assert code == 0
    for r in rows:
        if r["x"] % 2 == 0:
            assert r == {"x": r["x"], "admissible": False, "predicted": None, "direct": None}
        else:
            assert r["predicted"] == r["direct"] == 1


def test_degenerate_family_is_tabulated(capsys):
    code, out, _ = run(capsys, "--json", "family", fixture_path("inst-degenerate"), "--xmax", "5")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "degenerate" and "rank_quasi" not in rep
    assert [r["direct"] for r in rep["table"]] == [1, 2, 3, 4, 5]


@pytest.mark.parametrize("name", GOOD)
def test_analyze_golden(capsys, name):
    code, out, _ = run(capsys, "--json", "analyze", fixture_path(name), "--dset")
    assert code == 0
    assert out == (FIXTURES / "golden" / f"{name}.analyze.json").read_text()


@pytest.mark.parametrize("name", ["instA", "instB", "instC", "inst-degenerate"])
def test_family_golden(capsys, name):
    code, out, _ = run(capsys, "--json", "family", fixture_path(name), "--xmax", "10", "--verify")
    assert code == 0
    assert out == (FIXTURES / "golden" / f"{name}.family.json").read_text()


@pytest.mark.parametrize("name", GOOD)
def test_json_roundtrip_byte_identical(capsys, name):
    _, out, _ = run(capsys, "--json", "analyze", fixture_path(name))
    assert dumps(json.loads(out)) + "\n" == out


def test_r0_reports_rank_one(capsys):
    code, out, _ = run(capsys, "--json", "analyze", fixture_path("inst-r0"))
    assert code == 0 and json.loads(out)["goldie_rank"] == 1


def test_oracle_cli(capsys):
    code, out, _ = run(capsys, "oracle", fixture_path("inst-line"), "--radius", "10,15")
    assert code == 0 and "components = 6" in out
    code, out, _ = run(capsys, "oracle", fixture_path("inst-line"), "--radius", "10")
    assert code == 4 and "inconclusive" in out


def test_weyl_check_cli(capsys):
    code, out, _ = run(capsys, "weyl-check", "--n", "3", "--r", "2", "--box", "2")
    assert code == 0 and "125 weights: ok" in out
    code, out, _ = run(capsys, "weyl-check", "--n", "3", "--r", "2", "--expr", "d1 x1^2")
    assert code == 0 and out.strip() == "x1^2 d1 + 2 x1"


def test_include_cli(capsys):
    code, out, _ = run(capsys, "include", fixture_path("inst-line"), fixture_path("inst-line-open"))
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "include", fixture_path("inst-line-open"), fixture_path("inst-line"))
    assert code == 0 and out.strip() == "false"


def test_validation_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "r": 2, "g_basis": [[1, 1], [2, 2]], "chi": [0, 0], "alpha": [0, 0]}')
    assert run(capsys, "rank", bad)[0] == 2
    bad.write_text('{"n": 2, "r": 2, "g_basis": [[1, 1]], "chi": [1], "alpha": [0, 0]}')
    assert run(capsys, "rank", bad)[0] == 2
    bad.write_text("not json")
    assert run(capsys, "rank", bad)[0] == 2
    assert run(capsys, "rank", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "goldie", "rank", str(fixture_path("instB"))], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "3"


def test_no_dilation_axis_family_is_tabulated(capsys):
    code, out, _ = run(capsys, "--json", "family", fixture_path("inst-noaxis"), "--xmax", "6")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "no-dilation-axis"
    assert "rank_quasi" not in rep and "no closed form derived" in rep["note"]
    assert [r["direct"] for r in rep["table"]] == [3, 7, 11, 15, 19, 23]
