import json
import subprocess
import sys

import pytest

from nwalg.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_vw_basis_count(capsys):
    assert call(capsys, "vw", "basis", "--delta", "0", "--n", "3", "--d", "2", "--count") == (0, "12\n", "")


def test_paths_sum_squares(capsys):
    code, out, _ = call(capsys, "paths", "--delta", "2", "--n", "4", "--d", "2", "--sum-squares")
    assert (code, out) == (0, "12\n")


def test_verify_tensor(capsys):
    code, out, _ = call(capsys, "verify", "tensor", "--n", "2", "--d", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["relation", "status"]
    assert all(line.rstrip().endswith("pass") for line in lines[1:])


def test_verify_all_small(capsys):
    code, out, _ = call(capsys, "verify", "all", "--scale", "small")
    assert code == 0
    assert "fail" not in out
    assert len(out.strip().splitlines()) >= 9


def test_json_format(capsys):
    code, out, _ = call(capsys, "--format", "json", "params", "--delta", "0", "--n", "3", "--upto", "2")
    data = json.loads(out)
    assert code == 0
    assert data["alpha"] == "1/2" and data["beta"] == "5/2"
    assert [row["recursive"] for row in data["w"]] == ["6", "15", "75/2"]


def test_subcommand_format_flag(capsys):
    code, out, _ = call(capsys, "coideal", "act", "--gen", "B+1", "--flavor", "half", "--weight", ".x", "--format", "json")
    assert code == 0
    assert {(r["weight"], r["coef"]) for r in json.loads(out)} == {("∧∨", "1"), ("∨∧", "q^-1")}


def test_tsv_format(capsys):
    code, out, _ = call(capsys, "paths", "--delta", "2", "--n", "4", "--d", "2", "--format", "tsv")
    lines = out.strip().splitlines()
    assert lines[0] == "endpoint\tcount"
    assert sum(int(line.split("\t")[1]) ** 2 for line in lines[1:]) == 12


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("NWALG_FORMAT", "json")
    code, out, _ = call(capsys, "brauer", "count", "--d", "3")
    assert (code, json.loads(out)) == (0, 15)


def test_usage_error(capsys):
    code, _, err = call(capsys, "vw", "basis")
    assert code == 2 and "usage" in err
    assert call(capsys, "nonsense")[0] == 2


def test_domain_error(capsys):
    code, out, err = call(capsys, "bipartition", "--delta", "0", "--n", "2", "--weight", "v^")
    assert code == 1 and out == "" and err.startswith("error:")


def test_size_guard(capsys):
    code, _, err = call(capsys, "vw", "basis", "--delta", "0", "--n", "3", "--d", "6", "--count")
    assert code == 1 and "--force" in err


def test_box_commands(capsys):
    code, out, _ = call(capsys, "box", "transpose", "--grid", "o+-o/±ooo/o+o-/-o+o/o+oo")
    assert code == 0 and out == "◦±◦+◦\n−◦−◦−\n+◦◦−◦\n◦◦+◦◦\n"
    code, out, _ = call(capsys, "--format", "json", "box", "show", "--weight", "1/2", "--k", "1")
    assert json.loads(out)["box"]["grid"] == ["+"]


def test_cup_and_bar(capsys):
    code, out, _ = call(capsys, "cup", "show", "--weight", "..v^", "--flavor", "integer")
    assert out.splitlines() == ["◦◦∨∧", "cup 2-3"]
    code, out, _ = call(capsys, "coideal", "bar", "--flavor", "half", "--weight", "^v")
    assert out.strip() == "(1)*∧∨ + (q^-1 - q)*∨∧"


def test_deterministic(capsys):
    argv = ("--format", "json", "coideal", "canbasis", "--flavor", "half", "--weight", "^^vv")
    assert call(capsys, *argv) == call(capsys, *argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nwalg", "brauer", "count", "--d", "4"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "105\n"
