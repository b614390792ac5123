import pytest

from semiheyting.enumeration import (EnumerationTask, brute_force_tables, count_sh,
                                     enumerate_sh, find_countermodel)
from semiheyting.errors import SizeCapError
from semiheyting.lattice import BOOLEAN_4, make_chain
from semiheyting.structure import is_isomorphic
from semiheyting.terms import holds_identity
from semiheyting.varieties import belongs


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 10), (4, 160)])
def test_chain_counts(n, count):
    assert count_sh(make_chain(n)) == count


def test_chain_five():
    assert count_sh(make_chain(5)) == 10400


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_brute_force(n):
    L = make_chain(n)
    assert [A.arrow for A in enumerate_sh(L)] == sorted(brute_force_tables(L))


def test_boolean_lattice():
    assert count_sh(BOOLEAN_4) == 4
    reps = list(enumerate_sh(EnumerationTask(BOOLEAN_4, up_to_iso=True)))
    assert len(reps) == 3
    for i, A in enumerate(reps):
        assert not any(is_isomorphic(A, B) for B in reps[i + 1:])


def test_workers_do_not_change_output():
    L = make_chain(4)
    serial = [A.arrow for A in enumerate_sh(L)]
    parallel = [A.arrow for A in enumerate_sh(L, workers=3)]
    assert serial == parallel
    assert count_sh(make_chain(5), workers=2) == 10400


def test_names_are_stable():
    names = [A.name for A in enumerate_sh(make_chain(3))]
    assert names == [f"chain3#{i}" for i in range(10)]


def test_filter():
    algs = list(enumerate_sh(EnumerationTask(make_chain(3), filter=("CSH",))))
    assert algs and all(belongs(A, "CSH") for A in algs)


def test_cap():
    with pytest.raises(SizeCapError):
        list(enumerate_sh(make_chain(6)))
    with pytest.raises(SizeCapError):
        count_sh(make_chain(6), cap=5)
    assert count_sh(make_chain(2), cap=2) == 2


def test_countermodel_bt2_over_at1(C):
    A, witness = find_countermodel("(x -> y*) -> (x -> y)* = 1", within=["AT1"], max_size=3)
    assert A.arrow == C["L10"].arrow
    assert witness == {"x": 1, "y": 0}


def test_countermodel_bt1_over_bt2():
    A, witness = find_countermodel("(x -> y) -> (x -> y*)* = 1", within=["BT2"], max_size=4)
    assert A.size == 4 and belongs(A, "BT2")
    assert not holds_identity(A, "(x -> y) -> (x -> y*)* = 1")
    assert witness == {"x": 2, "y": 1}


def test_no_countermodel():
    assert find_countermodel("x ^ x* = 0", max_size=4) is None
