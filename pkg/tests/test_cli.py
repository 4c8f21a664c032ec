import json
import subprocess
import sys

import pytest

from qhodge import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_matrix_layout(capsys):
    code, out, _ = run(capsys, "matrix", "--calculus", "7", "--object", "sigma")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 9 and rows[3][1] == "q^4"


def test_matrix_specialized(capsys):
    code, out, _ = run(capsys, "matrix", "--calculus", "7", "--q", "1/4")
    assert code == 0
    assert json.loads(out)["rows"][3][1] == "1/256"


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--calculus", "8"),
        ("verify", "--calculus", "x"),
        ("verify", "--check", "nonsense"),
        ("verify", "--q", "2"),
        ("verify", "--q", "1"),
        ("verify", "--q", "-1/4"),
        ("matrix", "--sign", "sideways"),
        ("sphere", "laplacian", "--calculus", "6"),
        ("sphere", "laplacian", "--calculus", "3"),
        ("sphere", "laplacian"),
        (),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("qhodge: error:")


def test_sphere_check_skips_non_projectable(capsys):
    code, out, _ = run(capsys, "verify", "--calculus", "6", "--check", "sphere")
    assert code == 0
    report = json.loads(out)
    statuses = [c["status"] for r in report["reports"] for c in r["checks"]]
    assert statuses == ["skip", "skip"]


def test_verify_single_passing_check(capsys):
    code, out, _ = run(capsys, "verify", "--calculus", "1", "--check", "braid_equation", "--format", "text")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_verify_failing_check_exits_1(capsys):
    code, _, _ = run(capsys, "verify", "--calculus", "6", "--sign", "+", "--check", "ideal_equality")
    assert code == 1


def test_probe_table(capsys):
    code, out, _ = run(capsys, "sphere", "probe", "--all")
    assert code == 0
    assert json.loads(out) == {"1": True, "2": True, "3": False, "4": True, "5": True, "7": False}


def test_sphere_laplacian_rows(capsys):
    code, out, _ = run(capsys, "sphere", "laplacian", "--calculus", "1", "--degree", "1")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["monomial"] for r in rows] == ["1", "B0", "B+", "B-"]
    assert all(r["image"] == r["casimir"] for r in rows)


def test_tables(capsys, tmp_path):
    target = tmp_path / "hodge.json"
    code, out, _ = run(capsys, "table", "hodge", "--calculus", "4", "--op", "T", "--out", str(target))
    assert code == 0 and out == ""
    rows = json.loads(target.read_text())["rows"]
    assert len(rows) == 16
    code, out, _ = run(capsys, "table", "classes", "--calculus", "7", "--op", "T")
    assert code == 0 and json.loads(out)["branches"]


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "hodge", "--calculus", "1", "--op", "S"),
        ("table", "classes", "--calculus", "6"),
        ("matrix", "--calculus", "3", "--object", "antisymmetrizer3", "--sign", "-"),
        ("sphere", "probe", "--all"),
    ],
)
def test_exports_are_byte_identical(argv):
    cmd = [sys.executable, "-m", "qhodge.cli", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout and first.stdout == second.stdout


def test_report_lists_every_check_once(capsys):
    code, out, _ = run(capsys, "verify", "--calculus", "2", "--sign", "+", "--check", "sphere", "--check", "braid_equation")
    assert code == 0
    for report in json.loads(out)["reports"]:
        names = [c["name"] for c in report["checks"]]
        assert sorted(names) == ["braid_equation", "sphere"]
        assert "elapsed_ms" in report
