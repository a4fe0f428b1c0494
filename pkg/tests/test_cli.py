"""End-to-end command-line behavior and exit codes."""

import json

import pytest

from pgl import parse_graph, GraphDocument
from pgl.cli import run_command


@pytest.fixture()
def c5_file(tmp_path):
    p = tmp_path / "c5.g6"
    p.write_text("Dhc\n")
    return str(p)


@pytest.fixture()
def house_file(tmp_path):
    p = tmp_path / "house.el"
    p.write_text("1 2\n2 3\n3 4\n4 5\n1 5\n2 4\n")
    return str(p)


def test_analyze_pentagon(c5_file, capsys):
    assert run_command(["analyze", "--in", c5_file]) == 0
    out = capsys.readouterr().out
    assert out == "alpha=2 omega=2 chi=3 nice=false perfect=false\n"


def test_analyze_house(house_file, capsys):
    assert run_command(["analyze", "--in", house_file]) == 0
    assert capsys.readouterr().out == "alpha=2 omega=3 chi=3 nice=true perfect=true\n"


def test_analyze_reads_stdin_with_format(monkeypatch, capsys):
    import io, sys

    monkeypatch.setattr(sys, "stdin", io.StringIO("Dhc\n"))
    assert run_command(["analyze", "--format", "graph6"]) == 0
    assert "alpha=2" in capsys.readouterr().out


def test_certify_and_verify_house(house_file, tmp_path, capsys):
    cert_path = str(tmp_path / "house.cert.json")
    assert run_command(["certify", "--in", house_file, "--out", cert_path]) == 0
    doc = json.loads(open(cert_path).read())
    assert doc["alpha"] == 2
    assert doc["clique_cover"] == [[1, 5], [2, 3, 4]]
    assert doc["complement_coloring"] == {"1": 0, "2": 1, "3": 1, "4": 1, "5": 0}
    assert run_command(["verify", "--in", house_file, "--cert", cert_path]) == 0
    assert "certificate ok" in capsys.readouterr().out


def test_certify_pentagon_fails_with_evidence(c5_file, capsys):
    assert run_command(["certify", "--in", c5_file]) == 1
    out = capsys.readouterr().out
    assert "perfectness failure" in out
    assert "found=4 required=5" in out


def test_verify_rejects_tampered_certificate(house_file, tmp_path, capsys):
    cert_path = str(tmp_path / "cert.json")
    assert run_command(["certify", "--in", house_file, "--out", cert_path]) == 0
    doc = json.loads(open(cert_path).read())
    doc["complement_coloring"]["5"] = 1
    open(cert_path, "w").write(json.dumps(doc))
    assert run_command(["verify", "--in", house_file, "--cert", cert_path]) == 1
    assert "certificate invalid" in capsys.readouterr().out


def test_replicate_command(c5_file, tmp_path, capsys):
    out_path = str(tmp_path / "out.el")
    assert run_command(
        ["replicate", "--in", c5_file, "--vertex", "3", "--to", "edgelist", "--out", out_path]
    ) == 0
    g = parse_graph(GraphDocument("edgelist", open(out_path).read()))
    assert g.n == 6
    err = capsys.readouterr().err
    assert "replicated 3 -> 5" in err


def test_replicate_unknown_vertex_is_usage_error(c5_file):
    assert run_command(["replicate", "--in", c5_file, "--vertex", "99"]) == 2


def test_expand_command(house_file, capsys):
    assert run_command(["expand", "--in", house_file, "--mult", "1:2,2:1,3:1,4:1,5:1", "--to", "edgelist"]) == 0
    payload = capsys.readouterr().out
    g = parse_graph(GraphDocument("edgelist", payload))
    assert g.n == 6


def test_expand_bad_mult_string(house_file):
    assert run_command(["expand", "--in", house_file, "--mult", "nope"]) == 2
    assert run_command(["expand", "--in", house_file, "--mult", "1:2"]) == 2


def test_separate_command(c5_file, capsys):
    assert run_command(["separate", "--in", c5_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["separated"]["nodes"]) == 10
    assert len(doc["stable_sets"]) == 5
    assert len(doc["disjoint_parts"]) == 5
    assert set(doc["back"].values()) == {0, 1, 2, 3, 4}


def test_iso_command(tmp_path, capsys):
    a = tmp_path / "a.el"
    a.write_text("1 2\n2 3\n3 4\n4 5\n1 5\n")
    b = tmp_path / "b.el"
    b.write_text("11 12\n12 13\n13 14\n14 15\n11 15\n")
    assert run_command(["iso", "--in", str(a), "--other", str(b)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["forward"]) == {"1", "2", "3", "4", "5"}
    c = tmp_path / "c.el"
    c.write_text("1 2\n2 3\n3 4\n4 5\n")
    assert run_command(["iso", "--in", str(a), "--other", str(c)]) == 1


def test_sweep_command(capsys):
    assert run_command(["sweep", "--prop", "wpgt", "--n", "5", "--mode", "exhaustive"]) == 0
    assert capsys.readouterr().out == "1024 graphs, 0 counterexamples\n"


def test_sweep_random_mode(capsys):
    assert run_command(
        ["sweep", "--prop", "duality", "--n", "6", "--mode", "random", "--seed", "42", "--count", "10"]
    ) == 0
    assert capsys.readouterr().out == "10 graphs, 0 counterexamples\n"


def test_sweep_json_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run_command(
        ["sweep", "--prop", "duality", "--n", "3", "--json", str(out)]
    ) == 0
    capsys.readouterr()
    doc = json.loads(out.read_text())
    assert doc == {
        "properties": ["duality"],
        "n": 3,
        "mode": "exhaustive",
        "graphs_checked": 8,
        "counterexamples": [],
    }


def test_convert_command(c5_file, capsys):
    # graph6 nodes are 0-based; DIMACS output relabels them to 1..5.
    assert run_command(["convert", "--in", c5_file, "--to", "dimacs"]) == 0
    assert capsys.readouterr().out == "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n"


def test_convert_round_trip_bytes(house_file, capsys):
    assert run_command(["convert", "--in", house_file, "--to", "graph6"]) == 0
    first = capsys.readouterr().out
    assert run_command(["convert", "--in", house_file, "--to", "graph6"]) == 0
    assert capsys.readouterr().out == first


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.col"
    bad.write_text("p edge 2\n")
    assert run_command(["analyze", "--in", str(bad)]) == 2


def test_self_loop_input_exit_code(tmp_path):
    bad = tmp_path / "bad2.col"
    bad.write_text("p edge 2 1\ne 1 1\n")
    assert run_command(["analyze", "--in", str(bad)]) == 2


def test_usage_error_exit_code():
    assert run_command(["analyze", "--bogus"]) == 2
    assert run_command([]) == 2


def test_missing_file_exit_code():
    assert run_command(["analyze", "--in", "/nonexistent/x.g6"]) == 2
