import json
import subprocess
import sys

import jsonschema
import pytest

from bei.cli import REPORT_SCHEMA, main, parse_graph, serialize_graph
from bei.constructions import build_named
from bei.enumeration import connected_graphs_upto
from bei.graph import GraphError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def h_file(tmp_path):
    path = tmp_path / "H.g"
    path.write_text(serialize_graph(build_named("H")))
    return str(path)


def test_parse_text(P3):
    assert parse_graph("3\n1 2\n2 3") == P3
    assert parse_graph("# a comment\n3\n\n1 2  # edge\n2 3\n") == P3


def test_parse_json(H):
    text = '{"n":6,"edges":[[1,2],[4,5],[2,3],[2,6],[5,3],[5,6]]}'
    assert parse_graph(text) == H


@pytest.mark.parametrize("text,line", [("2\n1 1", 2), ("3\n1 2\n2 x", 3), ("3\n1 4", 2)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(GraphError, match=f"line {line}"):
        parse_graph(text)


def test_round_trip():
    for g in connected_graphs_upto(5):
        for fmt in ("text", "json"):
            assert parse_graph(serialize_graph(g, fmt)) == g


def test_depth_both(capsys, h_file):
    code, out, _ = run(capsys, "depth", h_file, "--method", "both", "--json", "--no-timings")
    data = json.loads(out)
    assert code == 0
    assert data["depth"]["verdict"]["value"] == 6
    assert data["depth"]["oracle"]["depth"] == 6
    assert data["depth"]["agree"] is True


def test_plain_has_same_numbers(capsys, h_file):
    _, out, _ = run(capsys, "depth", h_file, "--method", "both")
    assert "depth.verdict.value: 6" in out and "depth.oracle.depth: 6" in out


def test_cm_t3(capsys, tmp_path):
    path = tmp_path / "T3.g"
    path.write_text(serialize_graph(build_named("T3")))
    code, out, _ = run(capsys, "cm", str(path), "--json")
    data = json.loads(out)["cm"]
    assert code == 0 and data["cm"] and data["matched_case"] == "triangle-path"


def test_construct_then_depth(capsys, tmp_path):
    target = str(tmp_path / "g.json")
    assert run(capsys, "construct", "--depth-target", "7", "8", "-o", target)[0] == 0
    code, out, _ = run(capsys, "depth", target, "--json")
    assert code == 0 and json.loads(out)["depth"]["verdict"]["value"] == 7


@pytest.mark.parametrize("command", [
    ["classify"], ["spectrum"], ["dim", "--method", "both"], ["depth", "--method", "both"], ["cm"],
])
def test_json_schema(capsys, h_file, command):
    code, out, _ = run(capsys, command[0], h_file, *command[1:], "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), REPORT_SCHEMA)


def test_deterministic_output(capsys, h_file):
    argv = ["depth", h_file, "--method", "both", "--json", "--no-timings"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_flags_before_command(capsys, h_file):
    a = run(capsys, "--json", "--no-timings", "dim", h_file)[1]
    b = run(capsys, "dim", h_file, "--json", "--no-timings")[1]
    assert a == b


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "loop.g"
    bad.write_text("2\n1 1\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "depth")[0] == 1
    assert run(capsys, "depth", str(tmp_path / "missing.g"))[0] == 1
    big = tmp_path / "big.g"
    big.write_text(serialize_graph(build_named("path(10)")))
    assert run(capsys, "depth", str(big), "--method", "oracle")[0] == 3
    assert run(capsys, "verify", "--suite", "dim", "--max-n", "10")[0] == 3


def test_mismatch_exit(capsys, h_file, monkeypatch):
    import bei.primes

    monkeypatch.setattr(bei.primes, "krull_dim", lambda g: 99)
    assert run(capsys, "dim", h_file, "--method", "both")[0] == 4


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "main", "--max-n", "5", "--json", "--no-timings")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["counterexamples"] == []


def test_table(capsys, tmp_path):
    out_csv = tmp_path / "atlas.csv"
    code, out, _ = run(capsys, "table", "--n", "4", "-o", str(out_csv))
    lines = out_csv.read_text().splitlines()
    assert code == 0 and len(lines) == 7
    assert lines[0].startswith("n,canonical_id,chordal")


def test_cache_through_cli(capsys, monkeypatch, tmp_path, h_file):
    monkeypatch.setenv("BEI_CACHE_DIR", str(tmp_path / "cache"))
    argv = ["depth", h_file, "--method", "oracle", "--json", "--no-timings"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    (entry,) = (tmp_path / "cache").glob("*.json")
    entry.write_text("garbage")
    proc = subprocess.run([sys.executable, "-m", "bei", *argv], capture_output=True, text=True,
                          check=False)
    assert proc.returncode == 0 and proc.stdout == first
    assert "unreadable cache entry" in proc.stderr


def test_console_entry(h_file):
    proc = subprocess.run([sys.executable, "-m", "bei", "depth", h_file], capture_output=True,
                          text=True, check=False)
    assert proc.returncode == 0 and "6" in proc.stdout
