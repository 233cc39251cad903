import json

import pytest

from cyclomat.catalog import build_sporadic
from cyclomat.cli import main
from cyclomat.io import dump_graph, parse
from cyclomat.ring import ONE, SQRT2, ZERO
from cyclomat.graph import RGraph, canonical


@pytest.fixture
def intro_file(tmp_path):
    path = tmp_path / "intro.json"
    dump_graph(RGraph([[SQRT2, ONE], [ONE, ZERO]]), str(path))
    return str(path)


def test_check_intro_example(intro_file, capsys):
    assert main(["check", intro_file]) == 0
    out = capsys.readouterr().out
    assert "in S′: yes; in S: no" in out
    assert "x^2 - √2*x - 1" in out
    assert "integral char poly: no" in out


def test_check_catalog_name(capsys):
    assert main(["check", "@S14"]) == 0
    out = capsys.readouterr().out
    assert "in S′: yes; in S: yes" in out and "catalog match: S14" in out


def test_table1_output(capsys):
    assert main(["table1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("n")
    assert lines[5].endswith("4 | 4 | 0 | 0")
    assert main(["table1", "--json", "--max-n", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data[1] == {"n": 2, "total": 7, "zphi": 6, "zsqrt2": 1, "zsqrt3": 0}


def test_enumerate_writes_levels(tmp_path):
    out = tmp_path / "levels.json"
    assert main(["enumerate", "--ring", "zphi", "--max-n", "9", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["levels"][-1]["n"] == 9 and doc["levels"][-1]["count"] == 0
    out_s = tmp_path / "s.json"
    assert main(["enumerate", "--ring", "zsqrt3", "--max-n", "2", "--set", "s", "--out", str(out_s)]) == 0
    assert all(m["in_s"] for L in json.loads(out_s.read_text())["levels"] for m in L["members"])


def test_enumerate_all_keeps_integer_graphs(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["enumerate", "--ring", "zsqrt3", "--max-n", "3", "--out", str(a)]) == 0
    assert main(["enumerate", "--ring", "zsqrt3", "--max-n", "3", "--all", "--out", str(b)]) == 0
    ca = [L["count"] for L in json.loads(a.read_text())["levels"]]
    cb = [L["count"] for L in json.loads(b.read_text())["levels"]]
    assert ca[0] == cb[0] and ca[1] < cb[1]


def test_verify_catalog(capsys):
    assert main(["verify-catalog", "--k-max", "4"]) == 0
    out = capsys.readouterr().out
    assert "catalog verification: PASS" in out
    assert "not Galois invariant: S4^(2,φ)" in out


def test_canon(tmp_path, capsys):
    path = tmp_path / "g.json"
    G = build_sporadic("S8dag")
    dump_graph(G.permute(list(reversed(range(8)))), str(path))
    assert main(["canon", str(path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "key: " + canonical(G).hex()
    assert canonical(parse(lines[1])) == canonical(G)


def test_maximal(capsys):
    assert main(["maximal", "--ring", "zsqrt3", "--max-n", "5"]) == 0
    out = capsys.readouterr().out
    assert "4 maximal" in out and "S4^(√3)" in out
    assert main(["maximal", "--ring", "zsqrt3", "--max-n", "5", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert sum(m["status"] == "maximal" for m in doc["members"]) == 4


def test_export(tmp_path, capsys):
    assert main(["export", "@C2k:2", "--format", "dot"]) == 0
    assert "style=dashed" in capsys.readouterr().out
    out = tmp_path / "g.json"
    assert main(["export", "@S3", "--format", "json", "--out", str(out)]) == 0
    assert parse(out.read_text()) == build_sporadic("S3")


@pytest.mark.parametrize("argv", [
    [],
    ["enumerate", "--ring", "zsqrt7", "--max-n", "3"],
    ["enumerate", "--ring", "z", "--max-n", "0"],
    ["check", "/nonexistent/file.json"],
    ["check", "@S99"],
    ["export", "@T2k:2"],
    ["frobnicate"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


def test_schema_violation_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"ring": "z", "n": 1, "matrix": [[{"c": [1], "den": 1}]]}))
    assert main(["check", str(path)]) == 2
    assert "malformed" in capsys.readouterr().err


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_verification_failure_exit_code(monkeypatch, capsys):
    from cyclomat import catalog

    real = catalog.verify_catalog

    def broken(**kw):
        rep = real(**kw)
        rep.entries[0].checks["in_s"] = False
        return rep

    monkeypatch.setattr(catalog, "verify_catalog", broken)
    assert main(["verify-catalog", "--k-max", "3"]) == 1
    assert "catalog verification: FAIL" in capsys.readouterr().out
