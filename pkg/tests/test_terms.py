import pytest
from hypothesis import given, settings, strategies as st

from semiheyting.errors import MissingBindingError, TermSyntaxError
from semiheyting.structure import homomorphisms
from semiheyting.terms import (BOTTOM, TOP, Arrow, Join, Meet, Neg, Star, Variable,
                               eval_term, holds_identity, holds_identity_naive, holds_quasi,
                               parse_identity, parse_quasi, parse_term, read_identities,
                               size, substitute, to_str, variables)

x, y, z = Variable("x"), Variable("y"), Variable("z")

terms = st.recursive(
    st.sampled_from([x, y, z, Variable("u"), BOTTOM, TOP]),
    lambda sub: st.one_of(
        st.builds(Meet, sub, sub), st.builds(Join, sub, sub),
        st.builds(Arrow, sub, sub), st.builds(Star, sub)),
    max_leaves=12)


def test_precedence():
    assert parse_term("x ^ y v z") == Join(Meet(x, y), z)
    assert parse_term("x v y -> z") == Arrow(Join(x, y), z)
    assert parse_term("x -> y -> z") == Arrow(x, Arrow(y, z))
    assert parse_term("x ^ y*") == Meet(x, Star(y))
    assert parse_term("~x ^ y") == Meet(Neg(x), y)
    assert parse_term("(x -> y)*") == Star(Arrow(x, y))


def test_constants_and_unicode():
    assert parse_term("T") == TOP and parse_term("F") == BOTTOM
    assert parse_term("¬x → ⊥ ∧ ⊤") == parse_term("~x -> 0 ^ 1")
    assert parse_identity("x ≈ y") == parse_identity("x = y")


def test_star_is_arrow_to_bottom():
    assert parse_term("x*") == Arrow(x, BOTTOM)
    assert parse_term("x**") == Arrow(Arrow(x, BOTTOM), BOTTOM)


def test_inequality_encoding():
    ident = parse_identity("x <= y")
    assert ident.lhs == Meet(x, y) and ident.rhs == x


@pytest.mark.parametrize("text", ["(x ^ y", "x ^ y)", "x ^", "", "x -> -> y", "x # y", "x = "])
def test_syntax_errors(text):
    with pytest.raises(TermSyntaxError):
        parse_identity(text) if "=" in text else parse_term(text)


def test_identity_needs_one_equals():
    with pytest.raises(TermSyntaxError):
        parse_identity("x = y = z")
    with pytest.raises(TermSyntaxError):
        parse_term("x = y")


def test_error_position():
    with pytest.raises(TermSyntaxError) as err:
        parse_term("x ^ (y v z")
    assert err.value.position == 10


def test_printing():
    assert to_str(parse_term("(x* -> x)*")) == "(x* -> x)*"
    assert to_str(parse_term("(x -> y) -> z")) == "(x -> y) -> z"
    assert to_str(parse_term("x ^ (y v z)")) == "x ^ (y v z)"
    assert str(parse_identity("(x -> y) -> (x -> y*)* = 1")) == "(x -> y) -> (x -> y*)* = 1"


@given(terms)
def test_print_parse_round_trip(t):
    assert parse_term(to_str(t)) == t


def test_helpers():
    t = parse_term("x ^ (y -> x)")
    assert variables(t) == {"x", "y"}
    assert size(t) == 5
    assert substitute(t, {"x": z}) == parse_term("z ^ (y -> z)")


def test_read_identities():
    lines = ["# comment", "", "x ^ x = x  # idempotent", "x v 0 = x"]
    assert [str(i) for i in read_identities(lines)] == ["x ^ x = x", "x v 0 = x"]


def test_eval(C):
    A = C["CSH3"]
    t = parse_term("(x* -> x)*")
    assert [eval_term(t, A, {"x": v}) for v in A.elements] == [2, 2, 2]
    with pytest.raises(MissingBindingError):
        eval_term(t, A, {"y": 0})


def test_classical_refutes_at1(C):
    res = holds_identity(C["2"], "(x* -> x)* = 1")
    assert not res and res.witness == {"x": 1}


def test_variable_cap(C):
    with pytest.raises(ValueError):
        holds_identity(C["2"], "a ^ b ^ c ^ d ^ e = a ^ b ^ c ^ d ^ e")
    assert holds_identity(C["2"], "a ^ b ^ c ^ d ^ e = e ^ d ^ c ^ b ^ a", max_vars=None)


def test_quasi(C):
    si = parse_quasi("x v y = 1 ==> x = 1 | y = 1")
    assert holds_quasi(C["CSH3"], si)
    assert str(si) == "x v y = 1 ==> x = 1 | y = 1"


@settings(max_examples=60, deadline=None)
@given(terms, terms)
def test_vectorised_matches_naive(s, t):
    from semiheyting.algebra import corpus
    from semiheyting.terms import Identity
    for A in corpus().values():
        fast = holds_identity(A, Identity(s, t))
        slow = holds_identity_naive(A, Identity(s, t))
        assert fast == slow


@settings(max_examples=40, deadline=None)
@given(terms, st.data())
def test_homomorphisms_commute_with_evaluation(t, data):
    from semiheyting.algebra import corpus
    C = corpus()
    A, B = C["2bar"], C["CSH3"]
    f = next(homomorphisms(A, B))
    asg = {name: data.draw(st.sampled_from(list(A.elements))) for name in variables(t)}
    image = {k: f(v) for k, v in asg.items()}
    assert f(eval_term(t, A, asg)) == eval_term(t, B, image)
