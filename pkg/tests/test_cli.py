"""Command-line behavior: subcommands, report modes, exit codes."""

import pytest

from dycklab import serialize_graph
from dycklab.cli import main

from util import fig1_instance, fig2_source, gap_chain_instance


@pytest.fixture
def gap_chain(tmp_path):
    p = tmp_path / "chain.graph"
    p.write_text(serialize_graph(gap_chain_instance()))
    return str(p)


@pytest.fixture
def fig2(tmp_path):
    p = tmp_path / "cycle.graph"
    p.write_text(serialize_graph(fig2_source()))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_default_engine(capsys, gap_chain):
    code, out, _ = run(capsys, "solve", gap_chain)
    assert code == 0
    assert "answer: true" in out


def test_solve_wrap_only_engine_misses(capsys, gap_chain):
    code, out, _ = run(capsys, "solve", gap_chain, "--engine", "wrap-only")
    assert code == 0
    assert "answer: false" in out


def test_solve_cfl_engine_agrees(capsys, gap_chain):
    code, out, _ = run(capsys, "--kv", "solve", gap_chain, "--engine", "cfl")
    assert code == 0
    assert "answer=true" in out


def test_replay_reports_per_query_answers(capsys, tmp_path, gap_chain):
    script = tmp_path / "script.upd"
    script.write_text("query\ndel 3 l2bar 4\nquery\nins 3 l2bar 4\nquery\n")
    code, out, _ = run(capsys, "--kv", "replay", gap_chain, str(script))
    assert code == 0
    assert "queries=3" in out
    assert "answer[0]=true" in out
    assert "answer[1]=false" in out
    assert "answer[2]=true" in out


def test_reduce_writes_target_and_map(capsys, tmp_path, fig2):
    out_file = tmp_path / "target.graph"
    map_file = tmp_path / "names.tsv"
    code, out, _ = run(capsys, "reduce", "dyck2_to_undirected", fig2,
                       "-o", str(out_file), "--map", str(map_file))
    assert code == 0
    assert "target_vertices: 178" in out
    assert "vertices 178" in out_file.read_text()
    assert map_file.read_text().splitlines()[0] == "0\t0"


def test_verify_equiv_passes(capsys, tmp_path, fig2):
    script = tmp_path / "script.upd"
    script.write_text("query\nins 0 l2 0\nquery\ndel 0 l2 0\nquery\n")
    code, out, _ = run(capsys, "--kv", "verify-equiv", "dyck2_to_undirected",
                       fig2, str(script))
    assert code == 0
    assert "verdict=pass" in out
    assert "translated_counts=12,12" in out


def test_verify_equiv_alternating_worked_instance(capsys, tmp_path):
    graph = tmp_path / "alt.graph"
    graph.write_text(serialize_graph(fig1_instance()))
    script = tmp_path / "script.upd"
    script.write_text("query\n")
    code, out, _ = run(capsys, "--kv", "verify-equiv", "alt_to_neardyck",
                       str(graph), str(script))
    assert code == 0
    assert "answer[0]=true" in out
    assert "target_answer[0]=true" in out


def test_word_subcommands(capsys):
    code, out, _ = run(capsys, "word", "reduce",
                       "0", "0bar", "1", "1", "0", "0", "1", "1", "1", "1",
                       "1bar", "0")
    assert code == 0
    assert "reduced: 1 1 0 0 1 1 1 0" in out

    code, out, _ = run(capsys, "word", "q", "1", "0bar")
    assert "q: false" in out

    code, out, _ = run(capsys, "word", "theta", "0", "0bar")
    assert "theta: identity" in out
    assert "gamma_exponent: 0" in out

    code, out, _ = run(capsys, "word", "regular", "omega", "0bar", "0")
    assert "omega: true" in out

    code, out, _ = run(capsys, "word", "mu", "l1", "l1", "l2bar")
    assert "mu: 1" in out

    code, out, _ = run(capsys, "word", "neardyck", "v1", "dot", "v1bar")
    assert "neardyck: true" in out


def test_oracle_reach(capsys, gap_chain):
    code, out, _ = run(capsys, "--kv", "oracle", "reach", gap_chain,
                       "--max-len", "4")
    assert code == 0
    assert "pair=0,4" in out


def test_oracle_paths(capsys, gap_chain):
    code, out, _ = run(capsys, "--kv", "oracle", "paths", gap_chain, "0", "4",
                       "--balanced")
    assert code == 0
    assert "paths=1" in out
    assert "path[0]=l1 l1bar l2 l2bar" in out


def test_oracle_words(capsys):
    code, out, _ = run(capsys, "--kv", "oracle", "words", "--max-len", "4",
                       "--predicate", "dyck", "--list")
    assert code == 0
    assert "words=11" in out  # 1 + 2 + 8 balanced words up to length 4
    assert "word=eps" in out


def test_suite_subcommand(capsys):
    code, out, _ = run(capsys, "--kv", "suite", "prop1", "--samples", "40")
    assert code == 0
    assert "verdict=pass" in out


def test_missing_file_is_a_clean_error(capsys):
    code, _, err = run(capsys, "solve", "/nonexistent.graph")
    assert code == 2
    assert "error:" in err


def test_malformed_graph_is_a_clean_error(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("graph sideways\nvertices 1\nalphabet dyck 1\nmark 0 0\n")
    code, _, err = run(capsys, "solve", str(bad))
    assert code == 2
    assert "line 1" in err


def test_kv_reports_are_deterministic(capsys, gap_chain):
    _, first, _ = run(capsys, "--kv", "solve", gap_chain)
    _, second, _ = run(capsys, "--kv", "solve", gap_chain)
    assert first == second
