"""Terms in the language {^, v, ->, 0, 1}: syntax, parsing, evaluation and
exhaustive identity checking.

Concrete syntax, tightest first::

    atoms        x, y1, 0, 1, T (=1), F (=0), ( ... )
    postfix  *   t*  is  t -> 0
    prefix   ~   ~t  is  t -> 0
    meet     ^   left associative
    join     v   left associative
    arrow    ->  right associative

An identity is ``s = t``; ``s <= t`` abbreviates ``s ^ t = s``.  The Unicode
connectives ∧ ∨ → ¬ ⊤ ⊥ ≈ ≤ are accepted as synonyms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import MissingBindingError, TermSyntaxError

MAX_VARIABLES = 4


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class ConstBottom:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class ConstTop:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"

    def __str__(self):
        return to_str(self)


@dataclass(frozen=True)
class Arrow:
    left: "Term"
    right: "Term"

    def __str__(self):
        return to_str(self)


Term = Union[Variable, ConstBottom, ConstTop, Meet, Join, Arrow]
BOTTOM = ConstBottom()
TOP = ConstTop()


def Star(t: Term) -> Arrow:
    return Arrow(t, BOTTOM)


def Neg(t: Term) -> Arrow:
    return Arrow(t, BOTTOM)


def ArrowH(s: Term, t: Term) -> Arrow:
    """The Heyting-style implication s -> (s ^ t)."""
    return Arrow(s, Meet(s, t))


def IffH(s: Term, t: Term) -> Meet:
    return Meet(ArrowH(s, t), ArrowH(t, s))


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{to_str(self.lhs)} = {to_str(self.rhs)}"

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted(variables(self.lhs) | variables(self.rhs)))


@dataclass(frozen=True)
class QuasiIdentity:
    """premises imply at least one of the conclusions"""
    premises: tuple[Identity, ...]
    conclusions: tuple[Identity, ...]

    def __str__(self):
        prem = ", ".join(map(str, self.premises))
        concl = " | ".join(map(str, self.conclusions))
        return f"{prem} ==> {concl}" if prem else f"==> {concl}"

    @property
    def variables(self) -> tuple[str, ...]:
        names = set()
        for ident in self.premises + self.conclusions:
            names.update(ident.variables)
        return tuple(sorted(names))


def variables(t: Term) -> set[str]:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, (Meet, Join, Arrow)):
        return variables(t.left) | variables(t.right)
    return set()


def size(t: Term) -> int:
    if isinstance(t, (Meet, Join, Arrow)):
        return 1 + size(t.left) + size(t.right)
    return 1


def substitute(t: Term, subst: Mapping[str, Term]) -> Term:
    if isinstance(t, Variable):
        return subst.get(t.name, t)
    if isinstance(t, (Meet, Join, Arrow)):
        return type(t)(substitute(t.left, subst), substitute(t.right, subst))
    return t


# -- printing ---------------------------------------------------------------

_LEVEL = {Arrow: 1, Join: 2, Meet: 3}


def _level(t):
    if isinstance(t, Arrow) and t.right == BOTTOM:
        return 4
    return _LEVEL.get(type(t), 5)


def _wrap(t, need):
    s = to_str(t)
    return f"({s})" if _level(t) < need else s


def to_str(t: Term) -> str:
    """Print with the fewest parentheses that reparse to the same tree."""
    if isinstance(t, Variable):
        return t.name
    if isinstance(t, ConstBottom):
        return "0"
    if isinstance(t, ConstTop):
        return "1"
    if isinstance(t, Arrow):
        if t.right == BOTTOM:
            return _wrap(t.left, 4) + "*"
        return f"{_wrap(t.left, 2)} -> {_wrap(t.right, 1)}"
    if isinstance(t, Join):
        return f"{_wrap(t.left, 2)} v {_wrap(t.right, 3)}"
    if isinstance(t, Meet):
        return f"{_wrap(t.left, 3)} ^ {_wrap(t.right, 4)}"
    raise TypeError(f"not a term: {t!r}")


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow>->|→)
  | (?P<le><=|≤)
  | (?P<eq>=|≈)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<star>\*)
  | (?P<neg>~|¬)
  | (?P<meet>\^|∧)
  | (?P<join>∨)
  | (?P<const>[01⊤⊥])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)

_CONSTANTS = {"0": BOTTOM, "1": TOP, "⊥": BOTTOM, "⊤": TOP, "F": BOTTOM, "T": TOP}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        value = m.group()
        if kind == "ident":
            if value == "v":
                kind = "join"
            elif value in ("T", "F"):
                kind = "const"
        if kind != "ws":
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0]

    def take(self, kind):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            what = tok[1] or "end of input"
            raise TermSyntaxError(f"expected {kind}, found {what!r}", tok[2])
        self.i += 1
        return tok

    def arrow(self):
        left = self.join()
        if self.peek() == "arrow":
            self.i += 1
            return Arrow(left, self.arrow())
        return left

    def join(self):
        left = self.meet()
        while self.peek() == "join":
            self.i += 1
            left = Join(left, self.meet())
        return left

    def meet(self):
        left = self.unary()
        while self.peek() == "meet":
            self.i += 1
            left = Meet(left, self.unary())
        return left

    def unary(self):
        if self.peek() == "neg":
            self.i += 1
            return Neg(self.unary())
        t = self.atom()
        while self.peek() == "star":
            self.i += 1
            t = Star(t)
        return t

    def atom(self):
        kind, value, pos = self.tokens[self.i]
        if kind == "ident":
            self.i += 1
            return Variable(value)
        if kind == "const":
            self.i += 1
            return _CONSTANTS[value]
        if kind == "lpar":
            self.i += 1
            t = self.arrow()
            if self.peek() != "rpar":
                raise TermSyntaxError("unbalanced parentheses", self.tokens[self.i][2])
            self.i += 1
            return t
        if kind == "rpar":
            raise TermSyntaxError("unbalanced parentheses", pos)
        if kind == "end":
            raise TermSyntaxError("unexpected end of input", pos)
        raise TermSyntaxError(f"unexpected {value!r}", pos)


def _parse_tokens(tokens):
    if tokens[0][0] == "end":
        raise TermSyntaxError("empty input", 0)
    p = _Parser(tokens)
    t = p.arrow()
    kind, value, pos = p.tokens[p.i]
    if kind == "rpar":
        raise TermSyntaxError("unbalanced parentheses", pos)
    if kind != "end":
        raise TermSyntaxError(f"unexpected {value!r}", pos)
    return t


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    for kind, value, pos in tokens:
        if kind in ("eq", "le"):
            raise TermSyntaxError(f"unexpected {value!r} inside a term", pos)
    return _parse_tokens(tokens)


def parse_identity(text: str) -> Identity:
    tokens = _tokenize(text)
    splits = [i for i, tok in enumerate(tokens) if tok[0] in ("eq", "le")]
    if len(splits) != 1:
        raise TermSyntaxError(
            f"an identity needs exactly one '=' or '<=', found {len(splits)}")
    k = splits[0]
    lhs = _parse_tokens(tokens[:k] + [("end", "", tokens[k][2])])
    rhs = _parse_tokens(tokens[k + 1:])
    if tokens[k][0] == "le":
        return Identity(Meet(lhs, rhs), lhs)
    return Identity(lhs, rhs)


def parse_quasi(text: str) -> QuasiIdentity:
    """``p1, p2 ==> c1 | c2``; the premise list may be empty."""
    if "==>" not in text:
        raise TermSyntaxError("a quasi-identity needs '==>'")
    left, right = text.split("==>", 1)
    premises = tuple(parse_identity(s) for s in left.split(",") if s.strip())
    conclusions = tuple(parse_identity(s) for s in right.split("|"))
    return QuasiIdentity(premises, conclusions)


def as_identity(value) -> Identity:
    return parse_identity(value) if isinstance(value, str) else value


def read_identities(lines: Iterable[str]) -> list[Identity]:
    """One identity per line; blank lines and ``#`` comments are skipped."""
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(parse_identity(line))
    return out


# -- evaluation -------------------------------------------------------------

Assignment = dict[str, int]


def eval_term(t: Term, A, asg: Mapping[str, int]) -> int:
    if isinstance(t, Variable):
        try:
            return asg[t.name]
        except KeyError:
            raise MissingBindingError(t.name) from None
    if isinstance(t, ConstBottom):
        return 0
    if isinstance(t, ConstTop):
        return A.top
    left = eval_term(t.left, A, asg)
    right = eval_term(t.right, A, asg)
    if isinstance(t, Meet):
        return A.lattice.meet[left][right]
    if isinstance(t, Join):
        return A.lattice.join[left][right]
    return A.arrow[left][right]


def _eval_vec(t, tables, grid, top, shape):
    if isinstance(t, Variable):
        return grid[t.name]
    if isinstance(t, ConstBottom):
        return np.zeros(shape, dtype=np.int64)
    if isinstance(t, ConstTop):
        return np.full(shape, top, dtype=np.int64)
    left = _eval_vec(t.left, tables, grid, top, shape)
    right = _eval_vec(t.right, tables, grid, top, shape)
    meet, join, arrow = tables
    op = meet if isinstance(t, Meet) else join if isinstance(t, Join) else arrow
    return op[left, right]


def _assignment_grid(names, n):
    """Every assignment of ``names`` into range(n), in lexicographic order."""
    k = len(names)
    if k == 0:
        return {}, (1,)
    idx = np.indices((n,) * k).reshape(k, -1)
    return {name: idx[i] for i, name in enumerate(names)}, (n ** k,)


def _grid_assignment(grid, i):
    return {name: int(col[i]) for name, col in grid.items()}


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive check; truthy when nothing failed."""
    ok: bool
    witness: dict | None = None

    def __bool__(self):
        return self.ok


def _check_var_cap(names, max_vars):
    if max_vars is not None and len(names) > max_vars:
        raise ValueError(f"{len(names)} variables exceed the cap of {max_vars}")


def holds_identity(A, ident, max_vars: int | None = MAX_VARIABLES) -> Check:
    """Check ``ident`` under all |A|^k assignments.

    The reported witness is the lexicographically first failing assignment
    with variables taken in sorted name order.
    """
    ident = as_identity(ident)
    names = ident.variables
    _check_var_cap(names, max_vars)
    grid, shape = _assignment_grid(names, A.size)
    tables = A.np_tables
    lhs = _eval_vec(ident.lhs, tables, grid, A.top, shape)
    rhs = _eval_vec(ident.rhs, tables, grid, A.top, shape)
    bad = np.flatnonzero(lhs != rhs)
    if bad.size == 0:
        return Check(True)
    return Check(False, _grid_assignment(grid, bad[0]))


def holds_quasi(A, q: QuasiIdentity, max_vars: int | None = MAX_VARIABLES) -> Check:
    names = q.variables
    _check_var_cap(names, max_vars)
    grid, shape = _assignment_grid(names, A.size)
    tables = A.np_tables

    def sat(ident):
        return (_eval_vec(ident.lhs, tables, grid, A.top, shape)
                == _eval_vec(ident.rhs, tables, grid, A.top, shape))

    premises = np.ones(shape, dtype=bool)
    for ident in q.premises:
        premises &= sat(ident)
    conclusion = np.zeros(shape, dtype=bool)
    for ident in q.conclusions:
        conclusion |= sat(ident)
    bad = np.flatnonzero(premises & ~conclusion)
    if bad.size == 0:
        return Check(True)
    return Check(False, _grid_assignment(grid, bad[0]))


def holds_identity_naive(A, ident) -> Check:
    """Reference implementation: nested loops over eval_term."""
    ident = as_identity(ident)
    names = ident.variables
    for values in product(A.elements, repeat=len(names)):
        asg = dict(zip(names, values))
        if eval_term(ident.lhs, A, asg) != eval_term(ident.rhs, A, asg):
            return Check(False, asg)
    return Check(True)
