"""End-to-end CLI runs through main(argv).

Exit status contract: 0 success, 1 negative verification or empty
search, 2 usage or input errors, 3 infeasible construction.
"""

from __future__ import annotations

import subprocess
import sys

import pytest

from iasi import parse_graph, parse_labeling, serialize_graph, cycle, path
from iasi.cli import main


@pytest.fixture
def run(capsys):
    def invoke(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


def write_graph(tmp_path, g, name="g.txt"):
    p = tmp_path / name
    p.write_text(serialize_graph(g))
    return str(p)


# --- gen ---------------------------------------------------------------------


def test_gen_edge_list(run):
    code, out, err = run("gen", "--kind", "cycle", "--n", "4")
    assert code == 0 and err == ""
    assert parse_graph(out) == cycle(4)


def test_gen_complete_bipartite_takes_both_sides(run):
    code, out, _ = run("gen", "--kind", "complete_bipartite", "--m", "2", "--n", "3")
    assert code == 0
    assert parse_graph(out).edge_count == 6


def test_gen_missing_order_is_usage_error(run):
    code, _, err = run("gen", "--kind", "path")
    assert code == 2 and "needs --n" in err


def test_gen_dot_format(run):
    code, out, _ = run("gen", "--kind", "path", "--n", "2", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")


def test_gen_writes_out_file(run, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run("gen", "--kind", "path", "--n", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert parse_graph(target.read_text()) == path(3)


# --- label -------------------------------------------------------------------


def test_label_then_verify_round_trip(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(6))
    lpath = str(tmp_path / "lab.txt")
    code, _, _ = run(
        "label", "--graph", gpath, "--kind", "isoarithmetic",
        "--d", "2", "--sizes", "4", "--out", lpath,
    )
    assert code == 0
    code, out, _ = run(
        "verify", "--graph", gpath, "--labeling", lpath, "--expect", "isoarithmetic"
    )
    assert code == 0
    assert "isoarithmetic:              yes" in out


def test_label_identical_biarithmetic(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(4))
    code, out, _ = run(
        "label", "--graph", gpath, "--kind", "identical_biarithmetic", "--k", "2"
    )
    assert code == 0
    lab = parse_labeling(out)
    assert len(lab) == 4


def test_label_side_sizes_via_m_n(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(4))
    code, out, _ = run(
        "label", "--graph", gpath, "--kind", "bipartite_uniform_isoarithmetic",
        "--m", "3", "--n", "5",
    )
    assert code == 0
    sizes = sorted(len(lab) for lab in parse_labeling(out).assignment.values())
    assert sizes == [3, 3, 5, 5]


def test_label_odd_cycle_single_ratio_is_infeasible(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(5))
    code, _, err = run(
        "label", "--graph", gpath, "--kind", "identical_biarithmetic", "--k", "2"
    )
    assert code == 3 and "odd cycle" in err


def test_label_ratio_over_size_is_infeasible(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(4))
    code, _, err = run(
        "label", "--graph", gpath, "--kind", "identical_biarithmetic", "--k", "9"
    )
    assert code == 3 and "exceeds" in err


def test_label_missing_graph_file(run, tmp_path):
    code, _, err = run(
        "label", "--graph", str(tmp_path / "nope.txt"), "--kind", "isoarithmetic"
    )
    assert code == 2 and "error:" in err


def test_label_seed_flag_and_env_agree(run, tmp_path, monkeypatch):
    gpath = write_graph(tmp_path, path(4))
    _, by_flag, _ = run(
        "label", "--graph", gpath, "--kind", "isoarithmetic", "--seed", "77"
    )
    monkeypatch.setenv("IASI_SEED", "77")
    _, by_env, _ = run("label", "--graph", gpath, "--kind", "isoarithmetic")
    assert by_flag == by_env
    monkeypatch.delenv("IASI_SEED")
    _, by_default, _ = run("label", "--graph", gpath, "--kind", "isoarithmetic")
    assert by_default != by_flag


def test_label_dot_format_annotates_edges(run, tmp_path):
    gpath = write_graph(tmp_path, path(2))
    code, out, _ = run(
        "label", "--graph", gpath, "--kind", "isoarithmetic", "--format", "dot"
    )
    assert code == 0 and "|f+|=5" in out


def test_label_componentwise_uniform(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(5))
    code, out, _ = run(
        "label", "--graph", gpath, "--kind", "componentwise_uniform", "--r", "7"
    )
    assert code == 0
    assert all(len(l) == 4 for l in parse_labeling(out).assignment.values())


# --- verify -------------------------------------------------------------------


def test_verify_unmet_expectation_exits_one(run, tmp_path):
    gpath = write_graph(tmp_path, path(3))
    lpath = str(tmp_path / "lab.txt")
    assert run(
        "label", "--graph", gpath, "--kind", "isoarithmetic", "--out", lpath
    )[0] == 0
    code, out, _ = run(
        "verify", "--graph", gpath, "--labeling", lpath, "--expect", "biarithmetic"
    )
    assert code == 1
    assert "biarithmetic:               no" in out


def test_verify_malformed_labeling_exits_two(run, tmp_path):
    gpath = write_graph(tmp_path, path(2))
    lpath = tmp_path / "bad.txt"
    lpath.write_text("0: 2 1\n")
    code, _, err = run("verify", "--graph", gpath, "--labeling", str(lpath))
    assert code == 2 and "line 1" in err


def test_verify_structured_format(run, tmp_path):
    gpath = write_graph(tmp_path, path(2))
    lpath = tmp_path / "lab.txt"
    lpath.write_text("0: 0 1 2\n1: 0 3 6\n")
    code, out, _ = run(
        "verify", "--graph", gpath, "--labeling", str(lpath),
        "--expect", "strong", "--format", "structured",
    )
    assert code == 0
    assert "strong=true" in out.splitlines()


# --- classes --------------------------------------------------------------------


def test_classes_from_explicit_sets(run):
    code, out, _ = run("classes", "--set-a", "0..4", "--set-b", "0,1,2")
    assert code == 0
    assert "histogram={1:2, 2:2, 3:3}" in out


def test_classes_from_labeling_edge(run, tmp_path):
    lpath = tmp_path / "lab.txt"
    lpath.write_text("0: 0 1 2\n1: 0 2 4\n")
    code, out, _ = run(
        "classes", "--labeling", str(lpath), "--edge", "0,1", "--format", "structured"
    )
    assert code == 0
    assert "classes=7" in out.splitlines()


def test_classes_needs_a_source(run):
    code, _, err = run("classes", "--set-a", "1,2")
    assert code == 2 and "go together" in err
    code, _, err = run("classes")
    assert code == 2


# --- audit ----------------------------------------------------------------------


def test_audit_clean_sweep(run):
    code, out, _ = run("audit", "--theorem", "t-ncc", "--m", "3..6", "--n", "3..6")
    assert code == 0
    assert out.splitlines()[-1] == "all 16 grid points match"


def test_audit_reports_mismatch_without_failing(run):
    code, out, _ = run(
        "audit", "--theorem", "t-nmcc-ii", "--m", "5", "--n", "4", "--k", "2"
    )
    assert code == 0
    assert "MISMATCH" in out and "{1:4, 2:5, 3:2}" in out


def test_audit_ratio_theorem_needs_k(run):
    code, _, err = run("audit", "--theorem", "t-nsc-ii", "--m", "5..7", "--n", "3")
    assert code == 2 and "--k" in err


def test_audit_structured_output(run):
    code, out, _ = run(
        "audit", "--theorem", "edge-sin", "--m", "3,4", "--n", "3",
        "--k", "1..2", "--format", "structured",
    )
    assert code == 0
    assert all(
        "verdict=match" in line for line in out.splitlines()[:-1]
    )


# --- search ----------------------------------------------------------------------


def test_search_finds_witness(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(4))
    code, out, _ = run("search", "--graph", gpath)
    assert code == 0
    assert parse_labeling(out).vertices() == (0, 1, 2, 3)


def test_search_odd_cycle_reports_reason(run, tmp_path):
    gpath = write_graph(tmp_path, cycle(5))
    code, out, _ = run("search", "--graph", gpath)
    assert code == 1
    assert "graph not bipartite" in out


def test_search_exhausted_window_reports_reason(run, tmp_path):
    gpath = write_graph(tmp_path, path(2))
    code, out, _ = run(
        "search", "--graph", gpath, "--max-elem", "2", "--sizes", "3", "--k", "2"
    )
    assert code == 1
    assert "search window exhausted" in out


def test_search_size_limit_is_input_error(run, tmp_path):
    gpath = write_graph(tmp_path, path(9))
    code, _, err = run("search", "--graph", gpath)
    assert code == 3 and "limited to 8" in err


# --- module entry point -------------------------------------------------------------


def test_module_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "iasi", "gen", "--kind", "path", "--n", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert parse_graph(proc.stdout) == path(3)
