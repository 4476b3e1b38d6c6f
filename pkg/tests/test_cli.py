"""End-to-end CLI tests (in-process through main)."""

import json

import pytest

from radiuskit.cli import main
from radiuskit.graphs import complete, complete_bipartite, parse_graph, \
    serialize_graph
from radiuskit.radius import parse_vertex_sequence, verify_radius


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.edges"
    p.write_text(serialize_graph(complete(4)))
    return str(p)


@pytest.fixture
def seq_file(tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("v1 v2 v3 v4 v1\n")
    return str(p)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_ak(capsys):
    code, out, _ = run(capsys, ["ak", "--k", "4"])
    assert code == 0
    assert "a_4 = 4/3" in out and "000111" in out
    code, out, _ = run(capsys, ["ak", "--k", "2", "--cycle"])
    assert code == 0 and "windows 00 01 11 10" in out


def test_zk_wk(capsys):
    code, out, _ = run(capsys, ["zk", "--k", "5"])
    assert code == 0 and "7/4" in out
    code, out, _ = run(capsys, ["wk", "--k", "2", "--s", "5"])
    assert code == 0 and "w_2(5) = 4" in out


def test_verify_exit_codes(capsys, k4_file, seq_file):
    code, out, _ = run(capsys, ["verify", "radius", "--k", "2",
                                "--graph", k4_file, "--seq", seq_file])
    assert code == 0 and "valid" in out
    code, out, _ = run(capsys, ["verify", "radius", "--k", "1",
                                "--graph", k4_file, "--seq", seq_file])
    assert code == 1 and "INVALID" in out


def test_verify_cover(capsys, tmp_path, k4_file):
    cov = tmp_path / "cov.txt"
    cov.write_text("v1 v2 v3\nv1 v2 v4\nv1 v3 v4\n")
    code, out, _ = run(capsys, ["verify", "cover", "--k", "2",
                                "--graph", k4_file, "--seq", str(cov)])
    assert code == 0 and "reads 5" in out


def test_usage_errors(capsys, tmp_path):
    bad = tmp_path / "bad.edges"
    bad.write_text("a a\n")
    code, _, err = run(capsys, ["bounds", "--k", "1", "--graph", str(bad)])
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, ["ak", "--k", "0"])
    assert code == 2
    code, _, err = run(capsys, ["bounds", "--k", "1",
                                "--graph", str(tmp_path / "missing.edges")])
    assert code == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, ["ak", "--k", "25"])
    assert code == 3 and "budget" in err


def test_table2_byte_stable(capsys):
    code, first, _ = run(capsys, ["table2"])
    assert code == 0
    code, second, _ = run(capsys, ["table2"])
    assert first == second
    assert "4/3" in first and "00001111" in first


def test_json_lines_roundtrip(capsys):
    code, out, _ = run(capsys, ["construct", "bipartite", "--k", "2",
                                "--m", "5", "--n", "4",
                                "--format", "json-lines"])
    assert code == 0
    record = json.loads(out.strip())
    g = complete_bipartite(5, 4)
    seq = parse_vertex_sequence(record["sequence"], g)
    assert verify_radius(seq, 2).valid
    assert record["length"] == len(seq)


def test_json_graph_roundtrip(capsys, k4_file):
    code, out, _ = run(capsys, ["bounds", "--k", "2", "--graph", k4_file,
                                "--format", "json-lines"])
    record = json.loads(out.strip())
    assert record["edge_bound"] == "9/2" and record["fk_lower"] == 5


def test_construct_euler(capsys, k4_file):
    code, out, _ = run(capsys, ["construct", "euler1", "--graph", k4_file])
    assert code == 0 and "length 8" in out


def test_construct_cover(capsys):
    code, out, _ = run(capsys, ["construct", "cover-bipartite", "--k", "2",
                                "--m", "4", "--n", "5"])
    assert code == 0 and "reads" in out


def test_exact_commands(capsys, k4_file):
    code, out, _ = run(capsys, ["exact", "fk", "--k", "2",
                                "--graph", k4_file])
    assert code == 0 and "f_2 = 5" in out
    code, out, _ = run(capsys, ["exact", "ck", "--k", "2",
                                "--graph", k4_file])
    assert code == 0 and "c_2 = 5" in out
    code, out, _ = run(capsys, ["exact", "maxcut", "--graph", k4_file])
    assert code == 0 and "max cut = 4" in out


def test_exact_budget_exit(capsys, tmp_path):
    big = tmp_path / "big.edges"
    big.write_text("".join(f"a{i} a{i+1}\n" for i in range(25)))
    code, _, err = run(capsys, ["exact", "maxcut", "--graph", str(big)])
    assert code == 3


def test_maxcut_circulant(capsys):
    code, out, _ = run(capsys, ["maxcut", "circulant", "--n", "8", "--k", "2",
                                "--brute-check"])
    assert code == 0 and "mc = 12" in out and "brute force = 12" in out


def test_reduce_with_witness(capsys, tmp_path):
    graph_file = tmp_path / "k33.edges"
    graph_file.write_text(serialize_graph(complete_bipartite(3, 3)))
    witness = tmp_path / "path.txt"
    witness.write_text("x1 y1 x2 y2 x3 y3\n")
    target_out = tmp_path / "target.edges"
    code, out, _ = run(capsys, ["reduce", "ham-radius", "--k", "2",
                                "--graph", str(graph_file),
                                "--witness", str(witness),
                                "--target-out", str(target_out)])
    assert code == 0
    assert "witness length 13" in out
    target = parse_graph(target_out.read_text())
    assert target.num_vertices == 9 and target.num_edges == 18


def test_reduce_cover_witness(capsys, tmp_path):
    graph_file = tmp_path / "p3.edges"
    graph_file.write_text("v1 v2\nv2 v3\n")
    witness = tmp_path / "cover1.txt"
    witness.write_text("v1 v2\nv2 v3\n")
    code, out, _ = run(capsys, ["reduce", "cover1-coverk", "--k", "2",
                                "--graph", str(graph_file),
                                "--witness", str(witness),
                                "--format", "json-lines"])
    assert code == 0
    record = json.loads(out.strip())
    assert record["witness_length"] == 15 and record["losses"] == 1


def test_reduce_domain_error(capsys, tmp_path):
    graph_file = tmp_path / "k4.edges"
    graph_file.write_text(serialize_graph(complete(4)))
    code, _, err = run(capsys, ["reduce", "ham-radius", "--k", "2",
                                "--graph", str(graph_file)])
    assert code == 1 and "triangle" in err


def test_conjecture(capsys):
    code, out, _ = run(capsys, ["conjecture", "--max-k", "6"])
    assert code == 0
    assert out.count("equal") == 6


def test_threads_flag(capsys, monkeypatch):
    code, out, _ = run(capsys, ["ak", "--k", "2", "--threads", "4"])
    assert code == 0
    code, _, err = run(capsys, ["ak", "--k", "2", "--threads", "0"])
    assert code == 2
    monkeypatch.setenv("RADIUSKIT_THREADS", "3")
    code, out, _ = run(capsys, ["ak", "--k", "2"])
    assert code == 0
    monkeypatch.setenv("RADIUSKIT_THREADS", "0")
    code, _, _ = run(capsys, ["ak", "--k", "2"])
    assert code == 2


def test_construct_euler_requires_graph(capsys):
    code, _, err = run(capsys, ["construct", "euler1"])
    assert code == 2 and "graph" in err
