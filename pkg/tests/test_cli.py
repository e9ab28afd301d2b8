"""Command-line interface: outputs, exit codes, round trips."""

from __future__ import annotations

import json

import pytest

from antidim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_adim_oracle_cycle(capsys):
    code, out, _ = run(capsys, "adim", "--gen", "cycle:6", "--k", "2", "--mode", "oracle")
    assert code == 0
    assert "adim: 2" in out


def test_adim_oracle_absent(capsys):
    code, out, _ = run(capsys, "adim", "--gen", "path:5", "--k", "3")
    assert code == 0  # a definite negative is still definite
    assert "no 3-antiresolving set" in out


def test_adim_search_certified(capsys):
    code, out, _ = run(
        capsys, "adim", "--gen", "complete:5", "--k", "3", "--mode", "search", "--m", "2",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["adim"] == 2
    assert doc["confidence"] == "certified"


def test_adim_search_unknown_exit_code(capsys):
    # K_7 at k=4 with m=1: singletons are 6-antiresolving, nothing certifies
    code, out, _ = run(capsys, "adim", "--gen", "complete:7", "--k", "4", "--mode", "search", "--m", "1")
    assert code == 2


def test_anonymity_complete_graph(capsys):
    code, out, _ = run(capsys, "anonymity", "--gen", "complete:8", "--ell", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["k"] == 5
    assert doc["confidence"] == "exact"


def test_anonymity_bad_budget_is_an_error(capsys):
    code, _, err = run(capsys, "anonymity", "--gen", "cycle:4", "--ell", "0")
    assert code == 1
    assert "ell" in err


def test_spectrum_star(capsys):
    code, out, _ = run(capsys, "spectrum", "--gen", "star:5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["antidimensional_k"] == 4
    assert doc["table"][-1] == {"k": 4, "adim": 1, "basis": ["0"]}


def test_exactly_one_input_source_required(capsys, tmp_path):
    code, _, err = run(capsys, "adim", "--k", "1")
    assert code == 1
    p = tmp_path / "g.txt"
    p.write_text("0 1\n")
    code, _, err = run(capsys, "adim", "--input", str(p), "--gen", "path:3", "--k", "1")
    assert code == 1


def test_unknown_family_is_an_error(capsys):
    code, _, err = run(capsys, "adim", "--gen", "moebius:7", "--k", "1")
    assert code == 1
    assert "unknown graph family" in err


def test_gen_then_adim_round_trip(capsys, tmp_path):
    out_path = tmp_path / "t3.txt"
    code, out, _ = run(capsys, "gen", "--family", "family_F:r=3,dx=1,dy=1", "--out", str(out_path))
    assert code == 0
    code, out, _ = run(
        capsys, "adim", "--input", str(out_path), "--k", "3", "--mode", "oracle", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["adim"] == 1


def test_experiment_deterministic_csv(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code, out, _ = run(
            capsys, "experiment", "--cells", "m=1,2", "k=1..3", "--per-cell", "20",
            "--n-max", "10", "--seed", "7", "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == "m,k,algorithm,found,absent,unknown,success_rate,mean_ms"


def test_experiment_requires_seed(capsys, tmp_path):
    code, _, err = run(capsys, "experiment", "--out", str(tmp_path / "x.csv"))
    assert code == 1


def test_experiment_bad_cell_spec(capsys, tmp_path):
    code, _, err = run(
        capsys, "experiment", "--cells", "q=1", "k=1..2", "--seed", "1",
        "--out", str(tmp_path / "x.csv"),
    )
    assert code == 1


def test_audit_subcommand(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("a b\nb c\nc d\n")  # P_4: singleton fast path applies
    code, out, _ = run(capsys, "audit", "--input", str(p), "--ell", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["k"] == 1 and doc["confidence"] == "exact"
    assert doc["witness"] == ["a"]
