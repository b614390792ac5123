import pytest

from semiheyting.equivalence import roundtrip_check, to_connexive, to_heyting, translate
from semiheyting.errors import TranslationUnsoundError
from semiheyting.varieties import belongs


def test_csh3_to_l1(C):
    assert to_heyting(C["CSH3"]).arrow == C["L1"].arrow
    assert to_connexive(C["L1"]).arrow == C["CSH3"].arrow


def test_two_element(C):
    assert to_heyting(C["2bar"]).arrow == C["2"].arrow
    assert to_connexive(C["2"]).arrow == C["2bar"].arrow
    assert to_heyting(C["L1"]) == C["L1"]


def test_round_trips(C):
    assert roundtrip_check(C["CSH3"]).c_of_h is True
    assert roundtrip_check(C["L1"]).h_of_c is True
    assert roundtrip_check(C["2bar"]).c_of_h is True
    # L10 is not in the CSH3 variety, so going through H3 loses it
    assert roundtrip_check(C["L10"]).c_of_h is False


def test_h_always_sound(small_algebras):
    for A in small_algebras:
        assert translate(A, "h").valid
        assert belongs(to_heyting(A), "H")


def test_csh3_members_round_trip(small_algebras):
    for A in small_algebras:
        if belongs(A, "CSH3"):
            E = to_heyting(A)
            assert belongs(E, "H3")
            assert to_connexive(E) == A
        if belongs(A, "H3"):
            assert to_heyting(to_connexive(A)) == A


def test_unsound_target_raises():
    from semiheyting.equivalence import TranslationResult
    from semiheyting.lattice import LawReport
    from semiheyting.algebra import corpus
    A = corpus()["2"]
    bad = TranslationResult(A, ((0, 0), (0, 0)), "c", LawReport(False, "SH4", (0,)))
    with pytest.raises(TranslationUnsoundError):
        bad.target


def test_bad_direction(C):
    with pytest.raises(ValueError):
        translate(C["2"], "x")
