"""Finite bounded lattices given by meet/join tables.

Element 0 is always the bottom.  The top is stored explicitly so that tables
whose greatest element is not the largest index can be entered as printed.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence

from .errors import LawViolation, MalformedInputError

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LawReport:
    ok: bool
    law: str | None = None
    witness: tuple[int, ...] | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return f"{self.law} fails at {self.witness}"


PASS = LawReport(True)


def _freeze(table, size, label):
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"{label} table is not a matrix of integers") from exc
    if len(rows) != size or any(len(r) != size for r in rows):
        raise MalformedInputError(f"{label} table must be {size}x{size}")
    for i, j in product(range(size), repeat=2):
        if not 0 <= rows[i][j] < size:
            raise MalformedInputError(
                f"{label}[{i}][{j}] = {rows[i][j]} is outside 0..{size - 1}")
    return rows


def validate_lattice(meet: Sequence[Sequence[int]], join: Sequence[Sequence[int]],
                     top: int) -> LawReport:
    """Check the bounded-lattice laws exhaustively.

    Shape and range problems raise MalformedInputError; law failures are
    reported with the first witnessing tuple in lexicographic order.
    """
    size = len(meet)
    if size < 1:
        raise MalformedInputError("a lattice needs at least one element")
    m = _freeze(meet, size, "meet")
    j = _freeze(join, size, "join")
    if not 0 <= top < size:
        raise MalformedInputError(f"top {top} is outside 0..{size - 1}")
    elems = range(size)

    for name, op in (("meet", m), ("join", j)):
        for x in elems:
            if op[x][x] != x:
                return LawReport(False, f"{name}-idempotence", (x,))
    for name, op in (("meet", m), ("join", j)):
        for x, y in product(elems, repeat=2):
            if op[x][y] != op[y][x]:
                return LawReport(False, f"{name}-commutativity", (x, y))
    for name, op in (("meet", m), ("join", j)):
        for x, y, z in product(elems, repeat=3):
            if op[op[x][y]][z] != op[x][op[y][z]]:
                return LawReport(False, f"{name}-associativity", (x, y, z))
    for x, y in product(elems, repeat=2):
        if m[x][j[x][y]] != x or j[x][m[x][y]] != x:
            return LawReport(False, "absorption", (x, y))
    for x in elems:
        if m[x][0] != 0:
            return LawReport(False, "bottom", (x,))
        if j[x][top] != top:
            return LawReport(False, "top", (x,))
    return PASS


@dataclass(frozen=True)
class LatticeSpec:
    meet: Table
    join: Table
    top: int

    def __post_init__(self):
        report = validate_lattice(self.meet, self.join, self.top)
        if not report:
            raise LawViolation(report)
        size = len(self.meet)
        object.__setattr__(self, "meet", _freeze(self.meet, size, "meet"))
        object.__setattr__(self, "join", _freeze(self.join, size, "join"))

    @property
    def size(self) -> int:
        return len(self.meet)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.size)

    def leq(self, x: int, y: int) -> bool:
        return self.meet[x][y] == x

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs (x, y) with y covering x."""
        n = self.size
        out = []
        for x, y in product(range(n), repeat=2):
            if x == y or not self.leq(x, y):
                continue
            if not any(z not in (x, y) and self.leq(x, z) and self.leq(z, y) for z in range(n)):
                out.append((x, y))
        return tuple(out)

    @cached_property
    def is_chain(self) -> bool:
        return all(self.leq(x, y) or self.leq(y, x) for x, y in product(self.elements, repeat=2))

    def chain_order(self) -> list[int]:
        """Elements listed bottom to top; only meaningful for chains."""
        return sorted(self.elements, key=lambda x: sum(self.leq(y, x) for y in self.elements))

    def to_json(self) -> dict:
        return {"size": self.size, "top": self.top,
                "meet": [list(r) for r in self.meet], "join": [list(r) for r in self.join]}

    @classmethod
    def from_json(cls, data: dict) -> "LatticeSpec":
        try:
            size, top, meet, join = data["size"], data["top"], data["meet"], data["join"]
        except (KeyError, TypeError) as exc:
            raise MalformedInputError(f"lattice object is missing {exc}") from exc
        if len(meet) != size:
            raise MalformedInputError(f"declared size {size} does not match the tables")
        return cls(meet, join, top)


def make_chain(n: int) -> LatticeSpec:
    if n < 1:
        raise MalformedInputError(f"invalid chain size {n}")
    meet = [[min(x, y) for y in range(n)] for x in range(n)]
    join = [[max(x, y) for y in range(n)] for x in range(n)]
    return LatticeSpec(meet, join, n - 1)


def height(spec: LatticeSpec) -> int:
    """Number of covering steps in the longest chain from bottom to top."""
    rank = {x: sum(spec.leq(y, x) for y in spec.elements) for x in spec.elements}
    longest = {x: 0 for x in spec.elements}
    # rank strictly increases along the order, so lower ends are final when used
    for x, y in sorted(spec.covers, key=lambda c: rank[c[0]]):
        longest[y] = max(longest[y], longest[x] + 1)
    return longest[spec.top]


def automorphisms(spec: LatticeSpec) -> list[tuple[int, ...]]:
    """All meet- and join-preserving permutations, identity first."""
    n = spec.size
    m, j = spec.meet, spec.join
    found = []
    perm = [-1] * n
    used = [False] * n

    def consistent(k):
        for i in range(k + 1):
            a, b = (i, k)
            for op in (m, j):
                c = op[a][b]
                if perm[c] != -1 and perm[c] != op[perm[a]][perm[b]]:
                    return False
        return True

    def extend(k):
        if k == n:
            found.append(tuple(perm))
            return
        for v in range(n):
            if used[v]:
                continue
            perm[k] = v
            used[v] = True
            if consistent(k):
                extend(k + 1)
            used[v] = False
            perm[k] = -1

    extend(0)
    # the final check also covers pairs whose image was unset when tested
    result = [p for p in found if all(
        p[op[a][b]] == op[p[a]][p[b]] for op in (m, j) for a, b in product(range(n), repeat=2))]
    result.sort(key=lambda p: p != tuple(range(n)))
    return result


BOOLEAN_4 = LatticeSpec(
    meet=[[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 2, 0], [0, 3, 0, 3]],
    join=[[0, 1, 2, 3], [1, 1, 1, 1], [2, 1, 2, 1], [3, 1, 1, 3]],
    top=1,
)
