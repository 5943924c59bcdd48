import json
import subprocess
import sys

import pytest

from acyclic_coloring import constructions as C
from acyclic_coloring.cli import main
from acyclic_coloring.coloring import EdgeColoring, parse_coloring, serialize_coloring, verify_acyclic
from acyclic_coloring.graph import parse_graph, serialize_graph, write_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    write_graph(C.complete_graph(4), str(path))
    return path


def test_gen_families(capsys, tmp_path):
    for argv, expected in [
        (["kn", "4"], C.complete_graph(4)),
        (["knn", "3"], C.complete_bipartite(3)[0]),
        (["cocktail", "8"], C.cocktail_party_graph(8)),
        (["circulant", "8", "1,2,4"], C.circulant_graph(8, [1, 2, 4])),
        (["splice", "5", "14"], C.theorem2_splice(5, 14)[0]),
    ]:
        code, out, _ = run(capsys, "gen", *argv)
        assert code == 0
        assert parse_graph(out) == expected


def test_gen_splice_infeasible(capsys):
    code, _, err = run(capsys, "gen", "splice", "5", "13")
    assert code == 1 and "parity" in err


def test_gen_p1f_writes_graph_and_coloring(capsys, tmp_path):
    gpath, cpath = tmp_path / "g.txt", tmp_path / "c.txt"
    code, _, _ = run(capsys, "gen", "p1f", "5", "--drop-a", "2", "--drop-b", "2",
                     "-o", str(gpath), "--coloring-out", str(cpath))
    assert code == 0
    g = parse_graph(gpath.read_text())
    c = parse_coloring(cpath.read_text(), g)
    assert g == C.complete_bipartite(3)[0] and verify_acyclic(g, c).ok
    code, _, _ = run(capsys, "verify", str(gpath), str(cpath))
    assert code == 0


def test_verify_exit_codes(capsys, tmp_path):
    g = C.cycle_graph(4)  # (0,1) (0,3) (1,2) (2,3)
    gpath = tmp_path / "c4.txt"
    write_graph(g, str(gpath))
    for colors, code_expected, status in [([0, 1, 1, 0], 3, "bichromatic-cycle"),
                                          ([0, 0, 1, 2], 2, "improper"),
                                          ([0, 1, 1, 2], 0, "acyclic")]:
        cpath = tmp_path / "c.txt"
        cpath.write_text(serialize_coloring(g, EdgeColoring(3, colors)))
        code, out, _ = run(capsys, "verify", str(gpath), str(cpath))
        assert code == code_expected
        report = json.loads(out)
        assert report["status"] == status
    code, out, _ = run(capsys, "verify", str(gpath), str(tmp_path / "missing.txt"))
    assert code == 1


def test_verify_names_bad_line(capsys, tmp_path):
    gpath = tmp_path / "bad.txt"
    gpath.write_text("3 1\n0 5\n")
    cpath = tmp_path / "c.txt"
    cpath.write_text("")
    code, _, err = run(capsys, "verify", str(gpath), str(cpath))
    assert code == 1 and "line 2" in err


def test_solve(capsys, k4_file, tmp_path):
    code, out, _ = run(capsys, "solve", str(k4_file), "--k", "4", "--json")
    assert code == 2 and json.loads(out)["status"] == "exhausted"
    emit = tmp_path / "w.txt"
    code, out, _ = run(capsys, "solve", str(k4_file), "--k", "5", "--json", "--emit-coloring", str(emit))
    report = json.loads(out)
    assert code == 0 and report["status"] == "found" and set(report) >= {"status", "k", "nodes", "elapsed_ms"}
    g = C.complete_graph(4)
    assert verify_acyclic(g, parse_coloring(emit.read_text(), g)).ok
    code, out, _ = run(capsys, "solve", str(k4_file), "--json")
    assert code == 0 and json.loads(out)["k"] == 5
    code, out, _ = run(capsys, "solve", str(k4_file), "--k", "5", "--node-limit", "1", "--json")
    assert code == 3 and json.loads(out)["status"] == "timeout"


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--d", "5", "--m", "3")
    assert code == 0
    assert json.loads(out) == {"bound": 7, "rule": "counting", "lhs": 13, "rhs": 15}
    code, out, _ = run(capsys, "bound", "--d", "5", "--m", "3", "--x", "2")
    assert json.loads(out)["lhs"] == 15
    code, out, _ = run(capsys, "bound", "--knn", "3")
    assert json.loads(out)["bound"] == 5
    code, _, _ = run(capsys, "bound", "--d", "7", "--m", "3")
    assert code == 1
    code, _, _ = run(capsys, "bound")
    assert code == 1


def test_p1f(capsys, tmp_path):
    code, out, _ = run(capsys, "p1f", "7")
    assert code == 0 and json.loads(out)["perfect_1factorization"]
    code, out, _ = run(capsys, "p1f", "5", "--drop-b", "1")
    assert json.loads(out)["restricted"]["acyclic"]
    f = tmp_path / "m.txt"
    f.write_text("0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n")
    code, out, _ = run(capsys, "p1f", "--matchings", str(f))
    assert code == 2 and json.loads(out)["failing_pair"] == [0, 2]
    code, _, _ = run(capsys, "p1f", "9")
    assert code == 1


def test_lemma1(capsys, tmp_path):
    code, out, err = run(capsys, "lemma1", "--n", "4", "--exhaustive")
    assert code == 0 and "no triple exists" in err and json.loads(out)["no_triple_exists"]
    f = tmp_path / "t.txt"
    f.write_text("0 1 2 3\n1 2 3 0\n2 3 0 1\n")
    code, out, err = run(capsys, "lemma1", str(f))
    report = json.loads(out)
    assert code == 0 and report["pair"] == [0, 2] and report["pair_cycle_type"] == [2, 2]
    assert "product +1" in err
    f.write_text("0 1 2\n1 2 0\n2 0 1\n")
    code, _, _ = run(capsys, "lemma1", str(f))
    assert code == 1


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "gen", "kn")[0] == 1


def test_suite_forced_node_limit(capsys, tmp_path):
    out_path = tmp_path / "suite.json"
    code, _, err = run(capsys, "suite", "--node-limit", "1", "--json", str(out_path))
    reports = json.loads(out_path.read_text())
    assert code == 2
    by_id = {r["id"]: r for r in reports}
    assert [r["id"] for r in reports] == list(range(1, 11))
    assert by_id[2]["status"] in ("skipped", "fail")
    assert by_id[2]["measured"]["solver_k6"] == "timeout"


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "acyclic_coloring", "bound", "--d", "3", "--m", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["bound"] == 5
