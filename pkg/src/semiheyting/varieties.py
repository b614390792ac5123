"""Named subvarieties of semi-Heyting algebras as identity lists, and
classification of finite algebras against them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .terms import (Identity, QuasiIdentity, holds_identity, holds_quasi,
                    parse_identity, parse_quasi)

AT1 = "(x* -> x)* = 1"
AT2 = "(x -> x*)* = 1"
BT1 = "(x -> y) -> (x -> y*)* = 1"
BT2 = "(x -> y*) -> (x -> y)* = 1"
ANTI_HEYTING = "0 -> 1 = 0"
COMMUTATIVE = "x -> y = y -> x"
EXCHANGE = "x -> (y -> z) = y -> (x -> z)"
STONE = "x* v x** = 1"
WEAK_COMMUTATIVE = "x* -> y* = y* -> x*"
SI_CONDITION = "x v y = 1 ==> x = 1 | y = 1"
CSH3_I = "x v (x -> y) = x v ((x -> y) -> 1)"
CSH3_II = "x* v (x -> y) = (x v y) -> y"
H3_I1 = "x* v x** = 1"
H3_I2 = "x v (x -> y) = (x -> y)* -> x"


@dataclass(frozen=True)
class VarietyDescriptor:
    name: str
    identities: tuple[Identity, ...]
    quasi_identities: tuple[QuasiIdentity, ...] = ()
    source: str = ""
    experimental: bool = False

    @property
    def identity_strings(self) -> tuple[str, ...]:
        return tuple(str(i) for i in self.identities)


def _v(name, identities, source, quasi=(), experimental=False):
    return VarietyDescriptor(
        name,
        tuple(parse_identity(s) for s in identities),
        tuple(parse_quasi(s) for s in quasi),
        source,
        experimental,
    )


@lru_cache(maxsize=None)
def catalog() -> tuple[VarietyDescriptor, ...]:
    return (
        _v("H", ["(x ^ y) -> x = 1"], "Heyting algebras"),
        _v("AT1", [AT1], "Aristotle's thesis 1"),
        _v("AT2", [AT2], "Aristotle's thesis 2"),
        _v("BT1", [BT1], "Boethius' thesis 1"),
        _v("BT2", [BT2], "Boethius' thesis 2"),
        _v("CSH", [AT1, AT2, BT1, BT2], "connexive semi-Heyting algebras"),
        _v("SH_c", [COMMUTATIVE], "commutative semi-Heyting algebras"),
        _v("EX", [EXCHANGE], "exchange identity"),
        _v("StSH", [STONE], "Stone semi-Heyting algebras"),
        _v("AH", [ANTI_HEYTING], "anti-Heyting algebras"),
        _v("WCOM", [WEAK_COMMUTATIVE], "weak commutative identity"),
        _v("AB-a", ["x v x* = 1", ANTI_HEYTING], "anti-Boolean base (a)"),
        _v("AB-b", ["x** = x", ANTI_HEYTING], "anti-Boolean base (b)"),
        _v("AB-c", ["x -> y <= x* v y", ANTI_HEYTING], "anti-Boolean base (c)"),
        _v("AB-d", ["x -> y = (x* v y) ^ (y* v x)", ANTI_HEYTING], "anti-Boolean base (d)"),
        # as printed this base excludes 2bar itself (0 -> 1 = 0 but 0* v 1 = 1)
        _v("AB-d-printed", ["x -> y = x* v y", ANTI_HEYTING],
           "anti-Boolean base (d), literal transcription", experimental=True),
        _v("AB-e", ["x v (y -> z) = (x v y) -> (x v z)", ANTI_HEYTING],
           "anti-Boolean base (e)"),
        _v("AB-f", ["x -> (y -> z) = (x -> y) -> z"], "anti-Boolean base (f)"),
        _v("AB-g", ["x = (x -> y) -> y"], "anti-Boolean base (g)"),
        _v("AB-comm-ex", [COMMUTATIVE, EXCHANGE],
           "anti-Boolean via commutativity and exchange"),
        _v("AB-at1-i", [AT1, "x* v y* v (x -> y) = 1"],
           "anti-Boolean via AT1 and x* v y* v (x->y) = 1"),
        _v("AB-at1-ii", [AT1, "(x -> y) v (y -> z) v (z -> x) = 1"],
           "anti-Boolean via AT1 and (x->y) v (y->z) v (z->x) = 1"),
        _v("CSH3", [BT1, CSH3_I, CSH3_II], "variety generated by CSH3, relative to BT1"),
        _v("H3", [H3_I1, H3_I2], "variety generated by the 3-element Heyting algebra"),
        _v("H3-I2", [H3_I2], "H3 base without the Stone identity (unverified claim)",
           experimental=True),
        _v("CH", [
            "(x -> y) -> ((y -> z) -> (x -> z)) = 1",
            "(x -> y) -> (x -> y*)* = 1",
            "x ^ (x -> y) = x ^ y",
            "x -> y <= (z ^ x) -> (z ^ y)",
            "x -> y <= (z v x) -> (z v y)",
        ], "connexive Heyting algebras"),
    )


def descriptor(name: str) -> VarietyDescriptor:
    for v in catalog():
        if v.name == name:
            return v
    raise KeyError(f"no variety named {name!r}")


def check_membership(A, variety: VarietyDescriptor | str):
    """Return (identity_or_quasi, Check) for the first failing member, or None."""
    if isinstance(variety, str):
        variety = descriptor(variety)
    for ident in variety.identities:
        res = holds_identity(A, ident)
        if not res:
            return ident, res
    for q in variety.quasi_identities:
        res = holds_quasi(A, q)
        if not res:
            return q, res
    return None


def belongs(A, variety: VarietyDescriptor | str) -> bool:
    return check_membership(A, variety) is None


def classify(A, include_experimental: bool = True) -> frozenset[str]:
    return frozenset(
        v.name for v in catalog()
        if (include_experimental or not v.experimental) and belongs(A, v))


def explain(A) -> dict[str, tuple]:
    """Failing identity and witness for every rejected variety."""
    out = {}
    for v in catalog():
        failure = check_membership(A, v)
        if failure is not None:
            out[v.name] = failure
    return out


@dataclass(frozen=True)
class ConnexivityReport:
    ok: bool
    condition: str | None = None
    witness: dict | None = None

    def __bool__(self):
        return self.ok


def is_strongly_connexive_matrix(A) -> ConnexivityReport:
    """Kapsner's conditions read on the matrix with designated value top:
    (a) x -> x* never takes the top value; (b) x -> y and x -> y* never both do."""
    top = A.top
    for x in A.elements:
        if A.imp(x, A.star(x)) == top:
            return ConnexivityReport(False, "a", {"x": x})
    for x, y in product(A.elements, repeat=2):
        if A.imp(x, y) == top and A.imp(x, A.star(y)) == top:
            return ConnexivityReport(False, "b", {"x": x, "y": y})
    return ConnexivityReport(True)


AB_BASES = tuple(f"AB-{c}" for c in "abcdefg")
SI_QUASI = parse_quasi(SI_CONDITION)
