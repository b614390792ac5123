"""The h/c translations between the CSH3-variety and the 3-valued Heyting variety.

h replaces x -> y by x -> (x ^ y); c replaces it by (x -> y) ^ (x* -> y*).
Both keep the lattice reduct.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import SemiHeytingAlgebra, validate_sh
from .errors import TranslationUnsoundError
from .lattice import LawReport


def heyting_table(A):
    m = A.lattice.meet
    return tuple(tuple(A.arrow[x][m[x][y]] for y in A.elements) for x in A.elements)


def connexive_table(E):
    m = E.lattice.meet
    return tuple(
        tuple(m[E.arrow[x][y]][E.arrow[E.star(x)][E.star(y)]] for y in E.elements)
        for x in E.elements)


_TABLES = {"h": heyting_table, "c": connexive_table}


@dataclass(frozen=True)
class TranslationResult:
    source: SemiHeytingAlgebra
    arrow: tuple[tuple[int, ...], ...]
    direction: str
    report: LawReport

    @property
    def valid(self) -> bool:
        return self.report.ok

    @property
    def target(self) -> SemiHeytingAlgebra:
        if not self.valid:
            raise TranslationUnsoundError(self.direction, self.report)
        name = f"{self.direction}({self.source.name})" if self.source.name else None
        return SemiHeytingAlgebra(self.source.lattice, self.arrow, name)


def translate(A, direction: str) -> TranslationResult:
    """Apply the translation without insisting that the result is an algebra."""
    if direction not in _TABLES:
        raise ValueError(f"direction must be 'h' or 'c', not {direction!r}")
    table = _TABLES[direction](A)
    return TranslationResult(A, table, direction, validate_sh(A.lattice, table))


def to_heyting(A) -> SemiHeytingAlgebra:
    return translate(A, "h").target


def to_connexive(E) -> SemiHeytingAlgebra:
    return translate(E, "c").target


@dataclass(frozen=True)
class RoundTrip:
    c_of_h: bool | None
    h_of_c: bool | None


def _round(A, first, second):
    r1 = translate(A, first)
    if not r1.valid:
        return None
    r2 = translate(r1.target, second)
    return r2.valid and r2.arrow == A.arrow


def roundtrip_check(A) -> RoundTrip:
    """c(h(A)) = A and h(c(A)) = A compared as arrow tables; None marks a
    round trip whose intermediate table is not a semi-Heyting algebra."""
    return RoundTrip(_round(A, "h", "c"), _round(A, "c", "h"))
