"""Backtracking enumeration of semi-Heyting arrow tables on a fixed lattice."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .algebra import SemiHeytingAlgebra, validate_sh
from .errors import SizeCapError
from .lattice import LatticeSpec, automorphisms, make_chain
from .terms import Identity, as_identity, holds_identity
from .varieties import VarietyDescriptor, belongs, descriptor

DEFAULT_CAP = 5


@dataclass(frozen=True)
class EnumerationTask:
    lattice: LatticeSpec
    up_to_iso: bool = False
    filter: tuple[str, ...] | None = None


class _Search:
    """Cells are filled row-major with values tried in ascending order.

    SH4 fixes the diagonal.  SH2 is unary per cell and becomes a domain
    restriction.  Each SH3 instance x ^ (y->z) = x ^ ((x^y) -> (x^z)) links
    two cells and is checked once the later of the two is placed.
    """

    def __init__(self, lattice: LatticeSpec):
        n = lattice.size
        m = lattice.meet
        self.n = n
        self.meet = m
        self.top = lattice.top
        self.cells = [(x, y) for x, y in product(range(n), repeat=2) if x != y]
        order = {c: i for i, c in enumerate(self.cells)}
        self.domains = [[v for v in range(n) if m[x][v] == m[x][y]] for x, y in self.cells]
        checks = [set() for _ in self.cells]
        for x, y, z in product(range(n), repeat=3):
            c1 = (y, z)
            c2 = (m[x][y], m[x][z])
            if c1 == c2:
                continue
            last = max(order.get(c1, -1), order.get(c2, -1))
            if last >= 0:
                checks[last].add((x, c1, c2))
        self.checks = [sorted(c) for c in checks]
        self.table = [[self.top if x == y else -1 for y in range(n)] for x in range(n)]

    def ok(self, k):
        t, m = self.table, self.meet
        for x, (a, b), (c, d) in self.checks[k]:
            if m[x][t[a][b]] != m[x][t[c][d]]:
                return False
        return True

    def run(self, start=0) -> Iterator[tuple[tuple[int, ...], ...]]:
        if start == len(self.cells):
            yield tuple(tuple(r) for r in self.table)
            return
        x, y = self.cells[start]
        for v in self.domains[start]:
            self.table[x][y] = v
            if self.ok(start):
                yield from self.run(start + 1)
        self.table[x][y] = -1

    def subtree(self, first_value):
        """Tables whose first free cell holds ``first_value``."""
        if not self.cells:
            return list(self.run(0))
        x, y = self.cells[0]
        self.table[x][y] = first_value
        try:
            return list(self.run(1)) if self.ok(0) else []
        finally:
            self.table[x][y] = -1


def _subtree_job(args):
    lattice, value = args
    return _Search(lattice).subtree(value)


def _raw_tables(lattice: LatticeSpec, workers: int = 1):
    search = _Search(lattice)
    if workers <= 1 or not search.cells:
        yield from search.run()
        return
    jobs = [(lattice, v) for v in search.domains[0]]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps job order and jobs follow ascending first-cell value,
        # so the concatenation is already in canonical order
        for chunk in pool.map(_subtree_job, jobs):
            yield from chunk


def _act(perm, table):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        out[perm[x]][perm[y]] = perm[table[x][y]]
    return tuple(tuple(r) for r in out)


def canonical_form(table, autos) -> tuple[tuple[int, ...], ...]:
    return min(_act(p, table) for p in autos)


def lattice_label(lattice: LatticeSpec) -> str:
    if lattice == make_chain(lattice.size):
        return f"chain{lattice.size}"
    return f"lattice{lattice.size}"


def enumerate_sh(task: EnumerationTask | LatticeSpec, cap: int = DEFAULT_CAP,
                 workers: int = 1) -> Iterator[SemiHeytingAlgebra]:
    if isinstance(task, LatticeSpec):
        task = EnumerationTask(task)
    lattice = task.lattice
    if lattice.size > cap:
        raise SizeCapError(lattice.size, cap)
    autos = automorphisms(lattice) if task.up_to_iso else None
    filters = [descriptor(name) for name in task.filter or ()]
    prefix = lattice_label(lattice)
    index = 0
    for table in _raw_tables(lattice, workers):
        if autos is not None and len(autos) > 1 and canonical_form(table, autos) != table:
            continue
        A = SemiHeytingAlgebra(lattice, table, f"{prefix}#{index}")
        index += 1
        if all(belongs(A, v) for v in filters):
            yield A


def count_sh(lattice: LatticeSpec, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    if lattice.size > cap:
        raise SizeCapError(lattice.size, cap)
    return sum(1 for _ in _raw_tables(lattice, workers))


def brute_force_tables(lattice: LatticeSpec) -> list[tuple[tuple[int, ...], ...]]:
    """Every n^(n*n) table filtered by the full axiom check; tiny n only."""
    n = lattice.size
    out = []
    for flat in product(range(n), repeat=n * n):
        table = [flat[i * n:(i + 1) * n] for i in range(n)]
        if validate_sh(lattice, table):
            out.append(tuple(tuple(r) for r in table))
    return out


def find_countermodel(ident: Identity | str,
                      within: Sequence[VarietyDescriptor | str] = (),
                      max_size: int = 4,
                      extra_lattices: Sequence[LatticeSpec] = (),
                      cap: int = DEFAULT_CAP):
    """First algebra in the premise varieties where ``ident`` fails.

    Chains of size 2..max_size are scanned in enumeration order, then any
    extra lattices of admissible size.  Returns (algebra, assignment) or None.
    """
    if max_size > cap:
        raise SizeCapError(max_size, cap)
    ident = as_identity(ident)
    within = [descriptor(v) if isinstance(v, str) else v for v in within]
    lattices = [make_chain(n) for n in range(2, max_size + 1)]
    lattices += [L for L in extra_lattices if L.size <= max_size]
    for lattice in lattices:
        for A in enumerate_sh(EnumerationTask(lattice), cap=cap):
            if not all(belongs(A, v) for v in within):
                continue
            res = holds_identity(A, ident)
            if not res:
                return A, res.witness
    return None
