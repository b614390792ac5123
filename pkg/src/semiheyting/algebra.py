"""Finite semi-Heyting algebras and the built-in corpus of printed examples."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

import numpy as np

from .errors import LawViolation, MalformedInputError
from .lattice import PASS, LatticeSpec, LawReport, _freeze, make_chain


def validate_sh(lattice: LatticeSpec, arrow: Sequence[Sequence[int]]) -> LawReport:
    """Exhaustive check of x->x = 1, x ^ (x->y) = x ^ y and the relative
    distributivity law x ^ (y->z) = x ^ ((x^y) -> (x^z)), in that order."""
    n = lattice.size
    a = _freeze(arrow, n, "arrow")
    m, top = lattice.meet, lattice.top
    for x in range(n):
        if a[x][x] != top:
            return LawReport(False, "SH4", (x,))
    for x, y in product(range(n), repeat=2):
        if m[x][a[x][y]] != m[x][y]:
            return LawReport(False, "SH2", (x, y))
    for x, y, z in product(range(n), repeat=3):
        if m[x][a[y][z]] != m[x][a[m[x][y]][m[x][z]]]:
            return LawReport(False, "SH3", (x, y, z))
    return PASS


@dataclass(frozen=True)
class SemiHeytingAlgebra:
    lattice: LatticeSpec
    arrow: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        report = validate_sh(self.lattice, self.arrow)
        if not report:
            raise LawViolation(report)
        object.__setattr__(self, "arrow", _freeze(self.arrow, self.lattice.size, "arrow"))

    def __repr__(self):
        label = self.name or "unnamed"
        return f"<SemiHeytingAlgebra {label} size={self.size}>"

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> range:
        return self.lattice.elements

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bottom(self) -> int:
        return 0

    def meet(self, x, y):
        return self.lattice.meet[x][y]

    def join(self, x, y):
        return self.lattice.join[x][y]

    def imp(self, x, y):
        return self.arrow[x][y]

    def star(self, x):
        return self.arrow[x][0]

    def is_dense(self, x):
        return self.star(x) == 0

    def leq(self, x, y):
        return self.lattice.leq(x, y)

    @cached_property
    def np_tables(self):
        """(meet, join, arrow) as numpy arrays for vectorised evaluation."""
        return (np.array(self.lattice.meet, dtype=np.int64),
                np.array(self.lattice.join, dtype=np.int64),
                np.array(self.arrow, dtype=np.int64))

    def with_arrow(self, arrow, name=None) -> "SemiHeytingAlgebra":
        return SemiHeytingAlgebra(self.lattice, arrow, name)

    def to_json(self) -> dict:
        data = self.lattice.to_json()
        data["arrow"] = [list(r) for r in self.arrow]
        data["name"] = self.name or ""
        return data

    @classmethod
    def from_json(cls, data: dict) -> "SemiHeytingAlgebra":
        if "arrow" not in data:
            raise MalformedInputError("algebra object has no 'arrow' table")
        return cls(LatticeSpec.from_json(data), data["arrow"], data.get("name") or None)


def star(A: SemiHeytingAlgebra, x: int) -> int:
    return A.star(x)


def is_dense(A: SemiHeytingAlgebra, x: int) -> bool:
    return A.is_dense(x)


def _chain_algebra(name, arrow):
    return SemiHeytingAlgebra(make_chain(len(arrow)), arrow, name)


def _relabelled(name, order, arrow):
    """Algebra on a chain listed bottom-to-top by ``order`` (labels kept)."""
    n = len(order)
    pos = {e: i for i, e in enumerate(order)}
    meet = [[order[min(pos[x], pos[y])] for y in range(n)] for x in range(n)]
    join = [[order[max(pos[x], pos[y])] for y in range(n)] for x in range(n)]
    return SemiHeytingAlgebra(LatticeSpec(meet, join, order[-1]), arrow, name)


# Three-element chains use 0 < 1 < 2, so the middle element a is index 1
# and the top is index 2.
_CORPUS_SPECS = {
    "2": lambda: _chain_algebra("2", [[1, 1], [0, 1]]),
    "2bar": lambda: _chain_algebra("2bar", [[1, 0], [0, 1]]),
    "L1": lambda: _chain_algebra("L1", [[2, 2, 2], [0, 2, 2], [0, 1, 2]]),
    "CSH3": lambda: _chain_algebra("CSH3", [[2, 0, 0], [0, 2, 2], [0, 1, 2]]),
    "L10": lambda: _chain_algebra("L10", [[2, 0, 0], [0, 2, 1], [0, 1, 2]]),
    # labels as printed: 0 < 2 < 3 < 1
    "W4": lambda: _relabelled("W4", [0, 2, 3, 1], [
        [1, 0, 0, 0],
        [0, 1, 2, 3],
        [0, 3, 1, 1],
        [0, 1, 2, 1],
    ]),
    # labels as printed: 0 < 2 < 4 < 3 < 1
    "W5": lambda: _relabelled("W5", [0, 2, 4, 3, 1], [
        [1, 0, 0, 0, 0],
        [0, 1, 2, 3, 4],
        [0, 1, 1, 1, 3],
        [0, 1, 2, 1, 4],
        [0, 1, 2, 1, 1],
    ]),
}

# element labels used when printing corpus algebras
LABELS = {
    "L1": ("0", "a", "1"),
    "CSH3": ("0", "a", "1"),
    "L10": ("0", "a", "1"),
}


def corpus() -> dict[str, SemiHeytingAlgebra]:
    """The seven printed algebras, keyed 2, 2bar, L1, CSH3, L10, W4, W5."""
    return {name: build() for name, build in _CORPUS_SPECS.items()}


def label(A: SemiHeytingAlgebra, x: int) -> str:
    names = LABELS.get(A.name or "")
    return names[x] if names else str(x)
