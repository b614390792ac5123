"""Subalgebras, homomorphisms, congruences and subdirect irreducibility."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .algebra import SemiHeytingAlgebra
from .errors import SizeCapError

CONGRUENCE_CAP = 8

Partition = tuple[tuple[int, ...], ...]


def _ops(A):
    return (A.lattice.meet, A.lattice.join, A.arrow)


def subuniverse_closure(A: SemiHeytingAlgebra, seed: Iterable[int] = ()) -> frozenset[int]:
    closed = set(seed) | {0, A.top}
    frontier = list(closed)
    while frontier:
        new = set()
        for op in _ops(A):
            for x, y in product(closed, repeat=2):
                v = op[x][y]
                if v not in closed:
                    new.add(v)
        closed |= new
        frontier = list(new)
    return frozenset(closed)


@dataclass(frozen=True)
class Homomorphism:
    source: SemiHeytingAlgebra
    target: SemiHeytingAlgebra
    map: tuple[int, ...]

    def __call__(self, x):
        return self.map[x]

    @property
    def is_injective(self):
        return len(set(self.map)) == len(self.map)


def is_homomorphism(A, B, f) -> bool:
    if f[0] != 0 or f[A.top] != B.top:
        return False
    for opA, opB in zip(_ops(A), _ops(B)):
        for x, y in product(A.elements, repeat=2):
            if f[opA[x][y]] != opB[f[x]][f[y]]:
                return False
    return True


def homomorphisms(A, B, injective=False):
    """Backtracking over maps in lexicographic order, pruning on every
    operation instance whose inputs and output are already mapped."""
    n = A.size
    f = [-1] * n
    opsA, opsB = _ops(A), _ops(B)

    def consistent(k):
        for i in range(k + 1):
            for a, b in ((i, k), (k, i)):
                for opA, opB in zip(opsA, opsB):
                    c = opA[a][b]
                    if f[c] != -1 and f[c] != opB[f[a]][f[b]]:
                        return False
        return True

    def extend(k):
        if k == n:
            if is_homomorphism(A, B, f):
                yield Homomorphism(A, B, tuple(f))
            return
        for v in B.elements:
            if injective and v in f[:k]:
                continue
            if k == 0 and v != 0:
                continue
            if k == A.top and v != B.top:
                continue
            f[k] = v
            if consistent(k):
                yield from extend(k + 1)
            f[k] = -1

    yield from extend(0)


def find_embedding(A, B) -> Homomorphism | None:
    if A.size > B.size:
        return None
    return next(homomorphisms(A, B, injective=True), None)


def is_isomorphic(A, B) -> bool:
    return A.size == B.size and find_embedding(A, B) is not None


# -- congruences -------------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def blocks(self, n) -> Partition:
        groups = {}
        for x in range(n):
            groups.setdefault(self.find(x), []).append(x)
        return tuple(sorted(tuple(g) for g in groups.values()))


def _close(A, uf):
    """Merge blocks until every operation respects the partition."""
    n = A.size
    changed = True
    while changed:
        changed = False
        for op in _ops(A):
            for a, b in combinations(range(n), 2):
                if uf.find(a) != uf.find(b):
                    continue
                for w in range(n):
                    changed |= uf.union(op[a][w], op[b][w])
                    changed |= uf.union(op[w][a], op[w][b])
    return uf


def principal_congruence(A, a, b) -> Partition:
    uf = _UnionFind(A.size)
    uf.union(a, b)
    return _close(A, uf).blocks(A.size)


def _join(A, p, q) -> Partition:
    uf = _UnionFind(A.size)
    for part in (p, q):
        for block in part:
            for x in block[1:]:
                uf.union(block[0], x)
    # the join of two congruences is their transitive closure, already compatible
    return uf.blocks(A.size)


def is_congruence(A, partition: Partition) -> bool:
    block_of = {x: i for i, block in enumerate(partition) for x in block}
    if sorted(block_of) != list(A.elements):
        return False
    for op in _ops(A):
        for a, a2, b, b2 in product(A.elements, repeat=4):
            if block_of[a] == block_of[a2] and block_of[b] == block_of[b2]:
                if block_of[op[a][b]] != block_of[op[a2][b2]]:
                    return False
    return True


def congruences(A, cap: int = CONGRUENCE_CAP) -> list[Partition]:
    """All congruences, sorted by number of blocks (descending) then blocks."""
    if A.size > cap:
        raise SizeCapError(A.size, cap)
    n = A.size
    identity = tuple((x,) for x in range(n))
    found = {identity}
    principal = {principal_congruence(A, a, b) for a, b in combinations(range(n), 2)}
    found |= principal
    frontier = set(found)
    while frontier:
        new = set()
        for p in frontier:
            for q in principal:
                j = _join(A, p, q)
                if j not in found:
                    new.add(j)
        found |= new
        frontier = new
    return sorted(found, key=lambda p: (-len(p), p))


def refines(p: Partition, q: Partition) -> bool:
    """Every block of p lies inside a block of q."""
    block_of = {x: i for i, block in enumerate(q) for x in block}
    return all(len({block_of[x] for x in block}) == 1 for block in p)


def monolith(A) -> Partition | None:
    non_identity = [p for p in congruences(A) if len(p) < A.size]
    least = [p for p in non_identity if all(refines(p, q) for q in non_identity)]
    return least[0] if least else None


def is_subdirectly_irreducible(A) -> bool:
    """Trivial algebras are not subdirectly irreducible by convention."""
    if A.size < 2:
        return False
    return monolith(A) is not None


def embedded_corpus(A, library) -> list[str]:
    """Names of library algebras that embed into A."""
    return [name for name, B in library.items() if find_embedding(B, A) is not None]
