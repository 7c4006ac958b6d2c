"""CLI surface: JSON shapes, exit codes, file inputs, corpus runs."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest

from starcut.cli import main


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_kappa_family(capsys):
    code, out = run_cli(capsys, "kappa", "--family", "petersen")
    assert code == 0
    assert json.loads(out) == {"n": 10, "value": 3}


def test_kappa_g6(capsys):
    code, out = run_cli(capsys, "kappa", "--g6", "C~")
    assert code == 0
    assert json.loads(out)["value"] == 3


def test_skappa_with_witness(capsys):
    code, out = run_cli(capsys, "skappa", "--family", "b5", "--witness")
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "Found" and obj["value"] == 1
    assert obj["witness"] == [{"center": 3, "leaves": [0, 1]}]


def test_skappa_no_cut_and_pure(capsys):
    code, out = run_cli(capsys, "skappa", "--family", "cycle", "--param", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["status"] == "NoCutExists" and obj["value"] is None
    code, out = run_cli(capsys, "skappa", "--family", "cycle", "--param", "9",
                        "--pure")
    assert json.loads(out)["value"] == 2


def test_skappa_higher_arity(capsys):
    code, out = run_cli(capsys, "skappa", "--family", "complete_bipartite",
                        "--param", "3,6", "--arity", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["arity"] == 3 and obj["value"] == 1


def test_exists_verdicts(capsys):
    code, out = run_cli(capsys, "exists", "--family", "cycle", "--param", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["verdict"] == "NotExists" and obj["rule"] == "Mod2Iff"
    code, out = run_cli(capsys, "exists", "--family", "path", "--param", "7")
    obj = json.loads(out)
    assert obj["verdict"] == "Exists" and obj["rule"] == "DiameterRule"
    assert obj["witness"]


def test_cover_with_trace(capsys):
    code, out = run_cli(capsys, "cover", "--family", "petersen", "--trace")
    assert code == 0
    obj = json.loads(out)
    assert obj["size"] == 2 and len(obj["cut"]) == 3
    assert obj["kappa"] == 3
    assert "trace" in obj and "sides" in obj


def test_diam_cut(capsys):
    code, out = run_cli(capsys, "diam-cut", "--family", "path", "--param", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["family"] == [{"center": 2, "leaves": [1, 3]}]


def test_graph_from_files(tmp_path, capsys):
    g6 = tmp_path / "graph.g6"
    g6.write_text("C~\n", encoding="ascii")
    code, out = run_cli(capsys, "kappa", "--file", str(g6))
    assert code == 0 and json.loads(out)["value"] == 3

    el = tmp_path / "graph.el"
    el.write_text("5 4\n0 1\n1 2\n2 3\n3 4\n", encoding="ascii")
    code, out = run_cli(capsys, "kappa", "--file", str(el))
    assert code == 0 and json.loads(out)["value"] == 1


def test_verify_streams_jsonl(capsys):
    code, out = run_cli(capsys, "verify", "--n", "4")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert len(lines) == 7  # 6 records plus the summary
    assert "summary" in lines[-1]
    assert lines[-1]["summary"]["records"] == 6
    assert all("graph_id" in obj for obj in lines[:-1])


def test_verify_with_sink_and_checks(tmp_path, capsys):
    sink = str(tmp_path / "out.jsonl")
    code, out = run_cli(capsys, "verify", "--n", "5", "--out", sink,
                        "--checks", "bounds,mod2_rule", "--jobs", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1  # only the summary when a sink is given
    summary = json.loads(lines[0])["summary"]
    assert summary["records"] == 21
    assert summary["checks"]["mod2_rule"]["pass"] == 21


def test_verify_unknown_check_is_domain_error(capsys):
    code, out = run_cli(capsys, "verify", "--n", "4", "--checks", "bogus")
    assert code == 1
    assert "unknown check" in json.loads(out)["error"]


def test_ratio_includes_extremal_graph(capsys):
    code, out = run_cli(capsys, "ratio", "--max-n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] >= 1
    assert any(3 * r["struct_kappa"] == r["kappa"] for r in obj["witnesses"])


def test_explore_reports_counterexamples(capsys):
    code, out = run_cli(capsys, "explore", "--n", "4", "--arity", "3")
    assert code in (0, 1)
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    assert "summary" in lines[-1]
    assert "counterexamples" in lines[-1]["summary"]


def test_domain_errors_exit_one(capsys):
    code, out = run_cli(capsys, "kappa", "--g6", "!!bad!!")
    assert code == 1 and "error" in json.loads(out)
    code, out = run_cli(capsys, "skappa", "--family", "nosuch", "--param", "3")
    assert code == 1
    code, out = run_cli(capsys, "cover", "--family", "complete", "--param", "5")
    assert code == 1


def test_missing_file_exits_two(capsys):
    code, out = run_cli(capsys, "kappa", "--file", "/nonexistent/path.g6")
    assert code == 2 and "error" in json.loads(out)


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["kappa"])  # no graph source
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])  # no subcommand
    assert exc.value.code == 2


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "starcut.cli", "kappa", "--family", "cycle",
         "--param", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["value"] == 2
