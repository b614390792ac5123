"""Arithmetic laws of semi-Heyting algebras, unconditional and relative to
subvarieties, in machine-checkable form.

A law is an identity (or ``==>`` quasi-identity) string, or a named predicate
for the few statements that are not equational.  ``hypotheses`` names
catalog varieties; ``extra`` adds identities or quasi-identities to the
hypothesis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .lattice import height
from .terms import Check, holds_identity, holds_quasi, parse_identity, parse_quasi
from .varieties import CSH3_I, CSH3_II, SI_CONDITION, belongs


@dataclass(frozen=True)
class Law:
    statement: str
    hypotheses: tuple[str, ...] = ()
    extra: tuple[str, ...] = ()
    group: str = "SH"
    predicate: Callable | None = field(default=None, compare=False)

    def applies_to(self, A) -> bool:
        if not all(belongs(A, v) for v in self.hypotheses):
            return False
        return all(_holds(A, s) for s in self.extra)

    def check(self, A) -> Check:
        if self.predicate is not None:
            witness = self.predicate(A)
            return Check(witness is None, witness)
        return _holds(A, self.statement)


def _holds(A, text) -> Check:
    if "==>" in text:
        return holds_quasi(A, parse_quasi(text))
    return holds_identity(A, parse_identity(text))


def _nonzero_elements_dense(A):
    for x in A.elements:
        if x != 0 and (A.star(x) != 0 or A.imp(0, x) != 0):
            return {"x": x}
    return None


def _height_at_most_two(A):
    h = height(A.lattice)
    return None if h <= 2 else {"height": h}


def _laws(group, hypotheses, statements, extra=()):
    return [Law(s, tuple(hypotheses), tuple(extra), group) for s in statements]


UNCONDITIONAL = _laws("SH", (), [
    "1 -> x = x",
    "x <= (x v y) -> x",
    "x <= x -> 1",
    "x ^ ((x -> y) -> z) = x ^ (y -> z)",
    "x ^ (y v (x -> z)) = x ^ (y v z)",
    "x ^ ((x v y) -> z) = x ^ z",
    "x ^ ((x ^ y) -> z) = x ^ (y -> z)",
    "x ^ ((x -> y) v z) = x ^ (y v z)",
    "y ^ (x -> (y ^ z)) = y ^ (x -> z)",
    "y ^ (x -> z) <= x -> (y ^ z)",
    "x <= y -> (x ^ y)",
    "(x** ^ y)* = (x ^ y)*",
    "(x** ^ y**)* = (x ^ y)*",
    "x ^ (x* ^ y)* = x",
    "x ^ (((x ^ y) -> (x ^ z)) -> u) = x ^ ((y -> z) -> u)",
    "x ^ ((y -> (x ^ z)) -> u) = x ^ ((y -> z) -> u)",
    "(x -> y) -> z <= ((x ^ (y -> z)) -> y) -> z",
    "x ^ (y -> (x -> z)) = x ^ (y -> z)",
    "x ^ (y -> ((x ^ z) -> (x ^ u))) = x ^ (y -> (z -> u))",
    "x ^ x* = 0",
    "x ^ (y -> z) <= (x ^ y) -> z",
    "x <= (x ^ y) -> y",
    "x ^ ((y -> z) -> u) = x ^ (((x ^ y) -> z) -> u)",
    "x ^ ((y -> (z ^ x)) -> u) = x ^ ((y -> z) -> u)",
    "(x -> y) -> z <= ((x ^ (y -> z)) -> (y ^ ((x -> y) -> z))) -> z",
    "((x -> y) -> z) ^ (((x ^ (y -> z)) -> y) -> z) = (x -> y) -> z",
])

CONDITIONAL = (
    _laws("AT1", ["AT1"], [
        "x* -> x = 0",
        "0 -> 1 = 0",
        "0 -> x = x*",
        "x -> x* = 0",
        "x* -> 1 = x*",
        "(x -> x*)* = 1",
    ])
    + _laws("AT2", ["AT2"], [
        "0 -> 1 = 0",
        "0 -> x <= x*",
        "(x* -> x)* = 1",
    ])
    + _laws("BT2", ["BT2"], ["(x* -> x)* = 1"])
    + _laws("BT1", ["BT1"], [
        "x -> 1 <= x**",
        "(x* -> x)* = 1",
        "(x** -> x) -> 1 = 1",
        "x** = x -> 1",
        "x ^ y** = x ^ (y -> x)",
        "(x -> y*)* <= (x -> y)**",
        "x -> x** = 1",
        "(x -> y*)* = (x -> y)**",
        "(x -> y*) -> (x -> y)* = 1",
        "x* = 0 ==> x -> 1 = 1",
    ])
    + [
        Law("nonzero elements x have x* = 0 and 0 -> x = 0", ("BT1",),
            (CSH3_II, SI_CONDITION), "BT1+SI", _nonzero_elements_dense),
        Law("lattice height is at most 2", ("BT1",),
            (CSH3_I, CSH3_II, SI_CONDITION), "BT1+SI", _height_at_most_two),
    ]
    + _laws("WCOM", ["WCOM"], [
        "x* = x* -> 1",
        "0 -> 1 = 0",
        "x ^ (0 -> x) = 0",
        "(x* -> x)* = 1",
    ])
    + _laws("AH", ["AH"], [
        "0 -> x <= x*",
        "0 -> x = x*",
        "(x* -> x)* = 1",
    ])
    + _laws("AT1+EX", ["AT1", "EX"], [
        "x* = 0 -> (x -> 1)",
        "x -> ((x -> y) -> y) = 1",
        "y -> (x -> y) = x -> 1",
        "x -> (0 -> x) = 0",
        "(0 -> x)* = x -> 1",
        "x* = x* -> 1",
        "x -> 1 = x**",
        "x* = (x -> 1)*",
        "x -> (x -> 1) = 1",
        "x -> (y -> 1) = (x -> y) -> 1",
        "(x -> y) -> (x -> y*)* = 1",
    ])
    + _laws("SH_c", ["SH_c"], [
        "(x v y) ^ (y -> x) = x ^ y",
        "x = x -> 1",
        "((x v x*) ^ y)* = y*",
        "(x* -> x)* = 1",
    ])
    + _laws("BT2+SH_c", ["BT2", "SH_c"], [
        "x** = x",
        "0 -> 1 = 0",
        "x = (x -> y) -> y",
    ])
    + _laws("StSH+AT1", ["StSH", "AT1"], ["x* -> y* = y* -> x*"])
)

ALL_LAWS = tuple(UNCONDITIONAL + CONDITIONAL)


def failures(A, laws=ALL_LAWS):
    """(law, witness) for every applicable law that fails in A."""
    out = []
    for law in laws:
        if law.applies_to(A):
            res = law.check(A)
            if not res:
                out.append((law, res.witness))
    return out
