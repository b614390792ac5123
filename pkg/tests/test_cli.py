import json

import pytest

from semiheyting.algebra import corpus
from semiheyting.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def csh3_file(tmp_path):
    path = tmp_path / "csh3.json"
    path.write_text(json.dumps(corpus()["CSH3"].to_json()))
    return path


def test_classify_file(capsys, csh3_file):
    code, out, _ = run(capsys, "classify", "--algebra", str(csh3_file))
    assert code == 0
    assert {"CSH", "BT1", "CSH3"} <= set(out.split())


def test_classify_explain_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "classify", "--algebra", "L10", "--explain")
    data = json.loads(out)
    assert code == 0
    assert data["failures"]["BT2"]["witness"] == {"x": 1, "y": 0}


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--lattice", "chain:3", "--count-only")[:2] == (0, "10\n")


def test_enumerate_out_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "enumerate", "--lattice", "chain:3", "--out", str(a))
    run(capsys, "enumerate", "--lattice", "chain:3", "--out", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()
    assert len(json.loads(a.read_text())) == 10


def test_enumerate_filter_and_iso(capsys):
    code, out, _ = run(capsys, "enumerate", "--lattice", "boolean4", "--up-to-iso",
                       "--count-only")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "enumerate", "--lattice", "chain:3", "--filter", "CSH",
                       "--count-only")
    assert code == 0 and int(out) >= 1


def test_countermodel(capsys):
    code, out, _ = run(capsys, "--format", "json", "countermodel", "--identity",
                       "(x->y)->(x->y*)* = 1", "--within", "BT2", "--max-size", "4")
    data = json.loads(out)
    assert code == 0 and data["algebra"]["size"] == 4
    assert data["assignment"] == {"x": 2, "y": 1}


def test_countermodel_none(capsys):
    code, out, _ = run(capsys, "countermodel", "--identity", "x ^ x* = 0", "--max-size", "3")
    assert code == 1 and "no countermodel" in out


def test_translate(capsys, tmp_path):
    out_file = tmp_path / "h.json"
    code, out, _ = run(capsys, "translate", "--algebra", "CSH3", "--direction", "h",
                       "--roundtrip", "--out", str(out_file))
    assert code == 0 and "c(h(A)) = A: True" in out
    assert json.loads(out_file.read_text())["arrow"] == [list(r) for r in corpus()["L1"].arrow]


def test_check_proof(capsys, tmp_path):
    assert run(capsys, "check-proof", "sample")[0] == 0
    code, out, _ = run(capsys, "check-proof", "sample", "--logic", "SH")
    assert code == 1 and "rejected at step 2" in out
    code, out, _ = run(capsys, "--format", "json", "check-proof", "sample", "--scan")
    assert json.loads(out)["scan"]["ok"] is True


def test_validate(capsys, tmp_path):
    assert run(capsys, "validate", "--algebra", "2bar")[0] == 0
    data = corpus()["2"].to_json()
    data["arrow"] = [[1, 1], [1, 1]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "validate", "--algebra", str(path))
    assert code == 1 and "SH2" in out


def test_analyze(capsys):
    code, out, _ = run(capsys, "--format", "json", "analyze", "--algebra", "CSH3")
    data = json.loads(out)
    assert code == 0 and data["subdirectly_irreducible"] is True
    assert data["monolith"] == [[0], [1, 2]]


def test_corpus_dir(capsys, tmp_path, csh3_file):
    code, out, _ = run(capsys, "--corpus-dir", str(csh3_file.parent), "classify",
                       "--algebra", "csh3")
    assert code == 0 and "CSH3" in out.split()


@pytest.mark.parametrize("argv", [
    ["bogus"],
    [],
    ["enumerate", "--lattice", "chain:9"],
    ["enumerate", "--lattice", "chain:x"],
    ["--workers", "0", "verify-paper"],
    ["--max-enumeration-size", "9", "verify-paper"],
    ["classify", "--algebra", "/no/such/file.json"],
    ["countermodel", "--identity", "x = ", "--max-size", "2"],
    ["check-proof", "/no/such/proof.json", "--logic", "SH"],
    ["enumerate", "--lattice", "chain:2", "--filter", "NOPE"],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_bad_json_file(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{not json")
    assert main(["classify", "--algebra", str(path)]) == 2


def test_verify_paper_json_stable(capsys):
    code1, out1, _ = run(capsys, "--format", "json", "verify-paper")
    code2, out2, _ = run(capsys, "verify-paper", "--workers", "2", "--format", "json")
    assert code1 == code2 == 0
    assert out1 == out2
    rows = json.loads(out1)
    assert all(set(r) == {"claim", "citation", "expected", "computed", "verdict"} for r in rows)
