import json
import os

import pytest

from goldgraph.cli import main
from goldgraph.report import EacReport


def test_check_known(capsys):
    assert main(["check", "128"]) == 0
    assert "EAC present" in capsys.readouterr().out


def test_check_negative(capsys):
    assert main(["check", "100"]) == 0
    assert "no EAC, residual=0" in capsys.readouterr().out


def test_usage_errors():
    assert main(["check", "7"]) == 1
    assert main(["scan", "10", "9"]) == 1
    assert main(["no-such-command"]) == 1
    assert main(["paths", "--n", "128"]) == 1  # mode flag required


def test_scan_cli(tmp_path, capsys):
    out = str(tmp_path / "hits.jsonl")
    assert main(["scan", "4", "200", "--out", out]) == 0
    assert capsys.readouterr().out.split() == ["128"]
    assert [json.loads(l)["n"] for l in open(out)] == [128]


def test_scan_empty_range_is_success(capsys):
    assert main(["scan", "4", "100"]) == 0
    assert capsys.readouterr().out == ""


def test_analyze_writes_artifacts(tmp_path, capsys):
    out = str(tmp_path / "reports")
    assert main(["analyze", "128", "--out", out, "--budget", "30000"]) == 0
    base = os.path.join(out, "n=128")
    assert sorted(os.listdir(base)) == ["census.txt", "eac.dot", "gfg.dot", "report.json"]
    report = EacReport.from_json(open(os.path.join(base, "report.json")).read())
    assert report.n == 128 and report.eac_v == 8
    assert "EXCEPTIONAL" in open(os.path.join(base, "census.txt")).read()
    assert open(os.path.join(base, "gfg.dot")).read().startswith("digraph")


def test_analyze_without_eac(tmp_path, capsys):
    out = str(tmp_path / "reports")
    assert main(["analyze", "10", "--out", out]) == 0
    base = os.path.join(out, "n=10")
    assert "eac.dot" not in os.listdir(base)
    report = EacReport.from_json(open(os.path.join(base, "report.json")).read())
    assert report.eac_v == 0 and report.eac_planar is None


def test_report_json_round_trip(tmp_path):
    out = str(tmp_path / "reports")
    main(["analyze", "128", "--out", out, "--budget", "30000"])
    text = open(os.path.join(out, "n=128", "report.json")).read()
    assert EacReport.from_json(text).to_json() == text


def test_paths_cli(capsys):
    assert main(["paths", "--longest", "--n", "128"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("length=11 ")

    assert main(["paths", "--hamiltonian-cycles", "--n", "2200", "--eac"]) == 0
    out = capsys.readouterr().out
    assert "length=2 count=1" in out
    assert "3 13" in out


def test_paths_no_eac_is_usage_error(capsys):
    assert main(["paths", "--longest", "--n", "100", "--eac"]) == 1


def test_draw_cli(capsys):
    assert main(["draw", "--eac", "--n", "128", "--seed", "1", "--budget", "30000"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("planar=True seed=1")
    assert "crossings=" in out


def test_twin_cli(capsys):
    assert main(["twin", "--prime-limit", "100", "--max-n", "1000000000"]) == 0
    assert capsys.readouterr().out.strip() == "13 3 3 7 2200"
