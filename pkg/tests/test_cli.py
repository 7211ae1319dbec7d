import json
import subprocess
import sys

import pytest

from besselpoly.cli import dump_json, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_y_text(capsys):
    assert run(capsys, "y", "2", "--format", "text")[:2] == (0, "3x^2+3x+1\n")


def test_p0_json(capsys):
    code, out, _ = run(capsys, "p", "0", "--format", "json")
    assert code == 0 and json.loads(out) == {"coeffs": ["1"]}


def test_p_latex(capsys):
    assert run(capsys, "p", "4", "--format", "latex")[1] == "x^{4}+6x^{3}+15x^{2}+15x\n"


@pytest.mark.parametrize("argv", [["p", "-1"], ["y", "-3"], ["coeffs", "0"], ["verify", "all", "--n-max", "0"],
                                  ["bench", "--reps", "0"], ["nope"], ["coeffs", "3", "--format", "xml"],
                                  ["verify", "all", "--n-max", "2", "--corrupt", "5,0"]])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_coeffs_row4(capsys):
    code, out, _ = run(capsys, "coeffs", "4", "--method", "recurrence", "--format", "json")
    assert code == 0
    row4 = json.loads(out)["rows"][3]
    assert row4 == {
        "N": 4,
        "cells": [
            {"coeffs": ["0", "0", "0", "0", "1"]},
            {"coeffs": ["0", "0", "0", "6"]},
            {"coeffs": ["0", "0", "15"]},
            {"coeffs": ["0", "15"]},
        ],
    }


def test_coeffs_single_cell(capsys):
    out = run(capsys, "coeffs", "1", "--format", "csv")[1]
    assert out == "j,1\n0,x\n"


@pytest.mark.parametrize("fmt", ["text", "json", "csv", "latex"])
def test_coeffs_methods_identical(capsys, fmt):
    a = run(capsys, "coeffs", "5", "--method", "recurrence", "--format", fmt)[1]
    b = run(capsys, "coeffs", "5", "--method", "closed-form", "--format", fmt)[1]
    if fmt == "json":
        a, b = json.loads(a), json.loads(b)
        a.pop("method"), b.pop("method")
    assert a == b


def test_formats_show_same_monomials(capsys):
    text = run(capsys, "coeffs", "5", "--format", "text")[1]
    csv_ = run(capsys, "coeffs", "5", "--format", "csv")[1]
    latex = run(capsys, "coeffs", "5", "--format", "latex")[1]
    monos = ["x", "x^2", "x^5", "3x^2", "15x^2", "10x^4", "45x^3", "105x^2", "105x", "15x"]
    latex_monos = [m.replace("^", "^{") + "}" if "^" in m else m for m in monos]
    text_cells = text.split()
    csv_cells = {c for line in csv_.splitlines() for c in line.split(",")}
    latex_cells = {c.strip(" \\") for line in latex.splitlines() for c in line.split("&")}
    for m, lm in zip(monos, latex_monos):
        assert m in text_cells and m in csv_cells and lm in latex_cells


def test_text_table_layout(capsys):
    lines = run(capsys, "coeffs", "3")[1].splitlines()
    assert lines[0].split() == ["j\\N", "1", "2", "3"]
    assert lines[1].split() == ["0", "x", "x^2", "x^3"]
    assert lines[2].split() == ["1", "x", "3x^2"]
    assert lines[3].split() == ["2", "3x"]


def test_verify_all_defaults_like(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n-max", "6", "--k-max", "10", "--order", "16")
    assert code == 0 and out.endswith("all identities verified\n")


def test_verify_theorem2_minimal(capsys):
    code, out, _ = run(capsys, "verify", "theorem2", "--n-max", "1", "--k-max", "0", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"] and obj["reports"][0]["grid"] == [{"N": 1, "k": 0}]


def test_verify_corrupted_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "all", "--n-max", "4", "--k-max", "3", "--order", "6",
                       "--corrupt", "3,1", "--format", "json")
    assert code == 1
    failed = {r["identity"] for r in json.loads(out)["reports"] if not r["passed"]}
    assert failed == {"ClosedForm", "RowSum", "Theorem1", "Theorem2"}


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--n-max", "2", "--order", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "identity,params,passed,index,expected,actual",
        "Theorem1,\"N=1,K=3\",true,,,",
        "Theorem1,\"N=2,K=3\",true,,,",
    ]


@pytest.mark.parametrize("argv", [["y", "7", "--format", "json"], ["coeffs", "6", "--format", "json"],
                                  ["verify", "all", "--n-max", "3", "--k-max", "2", "--order", "4", "--format", "json"],
                                  ["verify", "all", "--n-max", "3", "--k-max", "2", "--order", "4",
                                   "--corrupt", "2,1", "--format", "json"]])
def test_json_roundtrip_is_byte_identical(capsys, argv):
    out = run(capsys, *argv)[1]
    assert dump_json(json.loads(out)) == out


def test_bench_counts(capsys):
    code, out, _ = run(capsys, "bench", "--n-max", "10", "--reps", "1", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["unit"] == "us"
    rows = obj["rows"]
    assert [r["N"] for r in rows] == list(range(1, 11))
    assert rows[9]["terms"][5] == 126
    assert all(r["recurrence_us"] >= 0 and r["closed_form_us"] >= 0 for r in rows)


def test_bench_single_row(capsys):
    code, out, _ = run(capsys, "bench", "--n-max", "1", "--reps", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 and lines[1].split()[0] == "1"


def test_out_path(capsys, tmp_path):
    dest = tmp_path / "table.tex"
    code, out, _ = run(capsys, "coeffs", "3", "--format", "latex", "--out", str(dest))
    assert code == 0 and out == ""
    assert dest.read_text().startswith("\\[")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "besselpoly", "y", "4"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "105x^4+105x^3+45x^2+10x+1\n"
    proc = subprocess.run([sys.executable, "-m", "besselpoly", "p", "-1"], capture_output=True, text=True)
    assert proc.returncode == 2
