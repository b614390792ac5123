"""Hilbert-style derivations for the semi-Heyting logic and its axiomatic
extensions, checked step by step.

Formulas share the term syntax: ``~`` is negation (a -> 0), ``T``/``F`` are
top and bottom.  The basic axioms are stated with the Heyting-style
implication a =>H b := a -> (a ^ b); the connexive theses use the primitive
arrow.  The only rule is semi-Modus Ponens: from a and a =>H b infer b.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Mapping, Sequence, Union

from .errors import ProofFormatError, TermSyntaxError
from .terms import (BOTTOM, TOP, Arrow, ArrowH, Check, Identity, IffH, Join, Meet, Neg,
                    Term, Variable, holds_identity, parse_term, to_str)

a, b, c = Variable("alpha"), Variable("beta"), Variable("gamma")
H = ArrowH

AXIOMS: dict[str, Term] = {
    "A1": H(a, Join(a, b)),
    "A2": H(b, Join(a, b)),
    "A3": H(H(a, c), H(H(b, c), H(Join(a, b), c))),
    "A4": H(Meet(a, b), a),
    "A5": H(H(c, a), H(H(c, b), H(c, Meet(a, b)))),
    "A6": TOP,
    "A7": H(BOTTOM, a),
    "A8": H(H(Meet(a, b), c), H(a, H(b, c))),
    "A9": H(H(a, H(b, c)), H(Meet(a, b), c)),
    "A10": H(H(a, b), H(H(b, a), H(Arrow(a, c), Arrow(b, c)))),
    "A11": H(H(a, b), H(H(b, a), H(Arrow(c, b), Arrow(c, a)))),
    "A12": Neg(Arrow(Neg(a), a)),
    "A13": Neg(Arrow(a, Neg(a))),
    "A14": Arrow(Arrow(a, b), Neg(Arrow(a, Neg(b)))),
    "A15": Arrow(Arrow(a, Neg(b)), Neg(Arrow(a, b))),
    "CSH3-i": IffH(Join(a, Arrow(a, b)), Join(a, Arrow(Arrow(a, b), TOP))),
    "CSH3-ii": IffH(Join(Neg(a), Arrow(a, b)), Arrow(Join(a, b), b)),
}

_BASE = tuple(f"A{i}" for i in range(1, 12))

LOGICS: dict[str, tuple[str, ...]] = {
    "SH": _BASE,
    "AT1": _BASE + ("A12",),
    "AT2": _BASE + ("A13",),
    "BT1": _BASE + ("A14",),
    "BT2": _BASE + ("A15",),
    "CSH": _BASE + ("A12", "A13", "A14", "A15"),
    "CSH3": _BASE + ("A14", "CSH3-i", "CSH3-ii"),
}

# equivalent algebraic semantics, by catalog name
LOGIC_VARIETY: dict[str, str | None] = {
    "SH": None, "AT1": "AT1", "AT2": "AT2", "BT1": "BT1", "BT2": "BT2",
    "CSH": "CSH", "CSH3": "CSH3",
}


def metavariables(t: Term) -> set[str]:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, (Meet, Join, Arrow)):
        return metavariables(t.left) | metavariables(t.right)
    return set()


def _subst(t, binding):
    if isinstance(t, Variable):
        return binding[t.name]
    if isinstance(t, (Meet, Join, Arrow)):
        return type(t)(_subst(t.left, binding), _subst(t.right, binding))
    return t


def _as_formula(value) -> Term:
    if isinstance(value, str):
        try:
            return parse_term(value)
        except TermSyntaxError as exc:
            raise ProofFormatError(f"cannot parse formula {value!r}: {exc}") from exc
    return value


def instantiate(schema: str | Term, subst: Mapping[str, Union[str, Term]]) -> Term:
    """Replace the metavariables alpha, beta, gamma of an axiom schema."""
    pattern = AXIOMS[schema] if isinstance(schema, str) else schema
    needed = metavariables(pattern)
    missing = needed - set(subst)
    if missing:
        raise ProofFormatError(f"no binding for metavariable(s) {sorted(missing)}")
    unused = set(subst) - needed
    if unused:
        raise ProofFormatError(f"substitution binds unused name(s) {sorted(unused)}")
    return _subst(pattern, {k: _as_formula(v) for k, v in subst.items()})


@dataclass(frozen=True)
class AxiomStep:
    axiom: str
    subst: Mapping[str, Union[str, Term]] = field(default_factory=dict)
    formula: Term | None = None


@dataclass(frozen=True)
class SMPStep:
    """Indices are 1-based and must point at earlier steps."""
    premise: int
    implication: int
    formula: Term | None = None


Step = Union[AxiomStep, SMPStep]


@dataclass(frozen=True)
class Proof:
    logic: str
    steps: tuple[Step, ...]


@dataclass(frozen=True)
class ProofVerdict:
    ok: bool
    formulas: tuple[Term, ...]
    bad_step: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.ok

    @property
    def theorem(self) -> Term | None:
        return self.formulas[-1] if self.ok and self.formulas else None


def smp_conclusions(premise: Term, implication: Term) -> list[Term]:
    """What semi-Modus Ponens may conclude from the two formulas.

    ``p -> (p ^ g)`` yields g; any ``p -> r`` also yields r, plain modus
    ponens being sound for the designated value 1 in every algebra.
    """
    if not isinstance(implication, Arrow) or implication.left != premise:
        return []
    out = []
    rhs = implication.right
    if isinstance(rhs, Meet) and rhs.left == premise:
        out.append(rhs.right)
    out.append(rhs)
    return out


def check_proof(proof: Proof) -> ProofVerdict:
    if proof.logic not in LOGICS:
        raise ProofFormatError(f"unknown logic {proof.logic!r}; known: {sorted(LOGICS)}")
    allowed = LOGICS[proof.logic]
    formulas: list[Term] = []

    def reject(k, reason):
        return ProofVerdict(False, tuple(formulas), k, reason)

    for k, step in enumerate(proof.steps, start=1):
        if isinstance(step, AxiomStep):
            if step.axiom not in AXIOMS:
                raise ProofFormatError(f"step {k}: unknown axiom {step.axiom!r}")
            if step.axiom not in allowed:
                return reject(k, f"{step.axiom} is not an axiom of {proof.logic}")
            derived = instantiate(step.axiom, step.subst)
            if step.formula is not None and step.formula != derived:
                return reject(k, f"stated formula is not the {step.axiom} instance")
        elif isinstance(step, SMPStep):
            for idx in (step.premise, step.implication):
                if not 1 <= idx < k:
                    raise ProofFormatError(f"step {k}: index {idx} does not name an earlier step")
            options = smp_conclusions(formulas[step.premise - 1], formulas[step.implication - 1])
            if not options:
                return reject(k, f"step {step.implication} is not an implication whose "
                                 f"antecedent is step {step.premise}")
            if step.formula is None:
                derived = options[0]
            elif step.formula in options:
                derived = step.formula
            else:
                return reject(k, "stated formula does not follow by SMP")
        else:
            raise ProofFormatError(f"step {k}: not a proof step: {step!r}")
        formulas.append(derived)
    return ProofVerdict(True, tuple(formulas))


# -- files --------------------------------------------------------------------

def _step_from_json(k, item) -> Step:
    if not isinstance(item, dict):
        raise ProofFormatError(f"step {k}: expected an object")
    formula = _as_formula(item["formula"]) if "formula" in item else None
    if "axiom" in item:
        subst = item.get("subst", {})
        if not isinstance(subst, dict):
            raise ProofFormatError(f"step {k}: 'subst' must be an object")
        return AxiomStep(item["axiom"], {str(n): _as_formula(v) for n, v in subst.items()},
                         formula)
    if "smp" in item:
        pair = item["smp"]
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(i, int) for i in pair)):
            raise ProofFormatError(f"step {k}: 'smp' must be a pair of step numbers")
        return SMPStep(pair[0], pair[1], formula)
    raise ProofFormatError(f"step {k}: needs 'axiom' or 'smp'")


def proof_from_json(data, logic: str | None = None) -> Proof:
    """Accept a bare list of steps or {"logic": ..., "steps": [...]};
    an explicit ``logic`` argument overrides the file."""
    if isinstance(data, dict):
        logic = logic or data.get("logic")
        items = data.get("steps")
    else:
        items = data
    if not isinstance(items, list):
        raise ProofFormatError("a proof is a JSON list of steps")
    if logic is None:
        raise ProofFormatError("no logic given for the proof")
    return Proof(logic, tuple(_step_from_json(k, item) for k, item in enumerate(items, 1)))


def load_proof(path, logic: str | None = None) -> Proof:
    with open(path, encoding="utf-8") as fh:
        return proof_from_json(json.load(fh), logic)


def sample_proof(logic: str | None = None) -> Proof:
    text = resources.files("semiheyting").joinpath("data", "sample_csh_proof.json").read_text()
    return proof_from_json(json.loads(text), logic)


# -- semantics ----------------------------------------------------------------

@dataclass(frozen=True)
class ScanResult:
    ok: bool
    algebra: object = None
    witness: dict | None = None

    def __bool__(self):
        return self.ok


def soundness_scan(phi: Term, algebras: Sequence) -> ScanResult:
    """phi = 1 must hold under every assignment in every algebra."""
    ident = tau(phi)
    for A in algebras:
        res: Check = holds_identity(A, ident, max_vars=None)
        if not res:
            return ScanResult(False, A, res.witness)
    return ScanResult(True)


def tau(phi: Term) -> Identity:
    return Identity(phi, TOP)


def rho(ident: Identity) -> tuple[Term, Term]:
    return Arrow(ident.lhs, ident.rhs), Arrow(ident.rhs, ident.lhs)


def sigma1(phi: Term) -> Term:
    """Rewrite every arrow a -> b as a -> (a ^ b)."""
    if isinstance(phi, Arrow):
        left, right = sigma1(phi.left), sigma1(phi.right)
        return Arrow(left, Meet(left, right))
    if isinstance(phi, (Meet, Join)):
        return type(phi)(sigma1(phi.left), sigma1(phi.right))
    return phi


def sigma2(phi: Term) -> Term:
    """Rewrite every arrow a -> b as (a -> b) ^ (a* -> b*)."""
    if isinstance(phi, Arrow):
        left, right = sigma2(phi.left), sigma2(phi.right)
        return Meet(Arrow(left, right), Arrow(Neg(left), Neg(right)))
    if isinstance(phi, (Meet, Join)):
        return type(phi)(sigma2(phi.left), sigma2(phi.right))
    return phi


def format_formula(phi: Term) -> str:
    return to_str(phi)
