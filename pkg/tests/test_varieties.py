import pytest

from semiheyting.terms import holds_identity
from semiheyting.varieties import (AB_BASES, belongs, catalog, check_membership, classify,
                                   descriptor, explain, is_strongly_connexive_matrix)


def test_catalog_names_unique():
    names = [v.name for v in catalog()]
    assert len(names) == len(set(names))
    for name in ("H", "AT1", "AT2", "BT1", "BT2", "CSH", "SH_c", "EX", "StSH", "AH",
                 "WCOM", "CSH3", "H3", "CH") + AB_BASES:
        assert descriptor(name).name == name


def test_unknown_descriptor():
    with pytest.raises(KeyError):
        descriptor("nope")


def test_corpus_classification(C):
    assert {"CSH", "AT1", "AT2", "BT1", "BT2", "SH_c", "AH"} <= classify(C["2bar"])
    assert set(AB_BASES) <= classify(C["2bar"])
    assert {"CSH", "BT1", "CSH3"} <= classify(C["CSH3"])
    assert {"H", "H3", "EX"} <= classify(C["L1"])
    assert "AT1" not in classify(C["L1"])
    assert {"AT1", "AT2", "SH_c"} <= classify(C["L10"])
    assert "BT1" not in classify(C["W4"]) and "BT2" in classify(C["W4"])
    assert "BT1" in classify(C["W5"]) and "EX" not in classify(C["W5"])


def test_printed_witnesses(C):
    assert check_membership(C["L10"], "BT2")[1].witness == {"x": 1, "y": 0}
    assert check_membership(C["W4"], "BT1")[1].witness == {"x": 1, "y": 2}
    assert check_membership(C["W5"], "EX")[1].witness == {"x": 2, "y": 3, "z": 4}


def test_two_is_heyting_not_connexive(C):
    assert belongs(C["2"], "H")
    assert not belongs(C["2"], "AT1")


def test_literal_ab_d_excludes_2bar(C):
    # the base as transcribed rejects the generator of the variety it should define
    assert not belongs(C["2bar"], "AB-d-printed")
    assert belongs(C["2bar"], "AB-d")


def test_explain_matches_classify(C):
    A = C["L10"]
    failing = explain(A)
    assert set(failing) == {v.name for v in catalog()} - classify(A)
    for name, (ident, check) in failing.items():
        if hasattr(ident, "lhs"):
            assert holds_identity(A, ident).witness == check.witness


def test_csh3_is_si_restricted(C):
    assert belongs(C["CSH3"], "CSH3") and belongs(C["2bar"], "CSH3")
    assert not belongs(C["L10"], "CSH3")


@pytest.mark.parametrize("name,expected", [
    ("2bar", True), ("CSH3", True), ("L10", True), ("W4", True), ("W5", True),
    ("2", False), ("L1", False)])
def test_strong_connexivity(C, name, expected):
    report = is_strongly_connexive_matrix(C[name])
    assert report.ok is expected
    if not expected:
        assert report.condition == "a" and report.witness == {"x": 0}


def test_experimental_excluded_on_request(C):
    assert "H3-I2" not in classify(C["L1"], include_experimental=False)
