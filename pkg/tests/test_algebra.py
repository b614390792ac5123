import json
from itertools import product

import pytest

from semiheyting.algebra import SemiHeytingAlgebra, corpus, is_dense, label, star, validate_sh
from semiheyting.errors import LawViolation, MalformedInputError
from semiheyting.lattice import make_chain


def test_corpus_names(C):
    assert list(C) == ["2", "2bar", "L1", "CSH3", "L10", "W4", "W5"]
    assert [A.size for A in C.values()] == [2, 2, 3, 3, 3, 4, 5]


def test_printed_entries(C):
    assert C["2bar"].imp(0, 1) == 0
    assert C["2"].imp(0, 1) == 1
    assert C["CSH3"].imp(0, 1) == 0
    assert C["W4"].imp(2, 1) == 3
    assert C["W5"].imp(2, 4) == 3


def test_relabelled_orders(C):
    assert C["W4"].lattice.chain_order() == [0, 2, 3, 1]
    assert C["W5"].lattice.chain_order() == [0, 2, 4, 3, 1]
    assert C["W4"].top == C["W5"].top == 1


def test_star_and_density(C):
    assert star(C["2bar"], 1) == 0
    assert star(C["CSH3"], 1) == 0
    assert is_dense(C["CSH3"], 1)
    assert not is_dense(C["2"], 0)
    for A in C.values():
        assert star(A, 0) == A.top
        assert is_dense(A, A.top)


def test_labels(C):
    assert label(C["CSH3"], 1) == "a"
    assert label(C["W4"], 3) == "3"


def test_sh4_violation_names_the_element():
    # x -> x = 1 fails at a = 1 before anything else is looked at
    arrow = [[2, 2, 2], [0, 1, 2], [0, 1, 2]]
    report = validate_sh(make_chain(3), arrow)
    assert report.law == "SH4" and report.witness == (1,)


def test_sh2_violation():
    # 1 -> 0 = 1 gives 1 ^ (1 -> 0) = 1, not 0
    report = validate_sh(make_chain(2), [[1, 1], [1, 1]])
    assert report.law == "SH2" and report.witness == (1, 0)


def test_constructor_rejects(C):
    with pytest.raises(LawViolation):
        SemiHeytingAlgebra(make_chain(2), [[1, 1], [1, 1]])
    with pytest.raises(MalformedInputError):
        SemiHeytingAlgebra(make_chain(2), [[1, 1]])


def test_json_round_trip(C):
    for A in C.values():
        data = json.loads(json.dumps(A.to_json()))
        assert list(data) == ["size", "top", "meet", "join", "arrow", "name"]
        B = SemiHeytingAlgebra.from_json(data)
        assert B == A and B.name == A.name


def test_missing_arrow():
    with pytest.raises(MalformedInputError):
        SemiHeytingAlgebra.from_json(make_chain(2).to_json())


def test_general_laws(small_algebras):
    for A in small_algebras:
        for x in A.elements:
            assert A.imp(A.top, x) == x
            assert A.meet(x, A.star(x)) == 0


def test_np_tables_agree(C):
    A = C["W5"]
    m, j, a = A.np_tables
    for x, y in product(A.elements, repeat=2):
        assert (m[x, y], j[x, y], a[x, y]) == (A.meet(x, y), A.join(x, y), A.imp(x, y))
