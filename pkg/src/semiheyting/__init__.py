"""Finite semi-Heyting algebras, their connexive subvarieties and logics."""
from .algebra import SemiHeytingAlgebra, corpus, validate_sh
from .config import RunConfig
from .enumeration import EnumerationTask, count_sh, enumerate_sh, find_countermodel
from .equivalence import roundtrip_check, to_connexive, to_heyting
from .lattice import BOOLEAN_4, LatticeSpec, make_chain, validate_lattice
from .proofs import check_proof, instantiate, soundness_scan
from .structure import congruences, is_subdirectly_irreducible
from .terms import eval_term, holds_identity, parse_identity, parse_term
from .varieties import belongs, catalog, classify, is_strongly_connexive_matrix

__all__ = [
    "BOOLEAN_4", "EnumerationTask", "LatticeSpec", "RunConfig", "SemiHeytingAlgebra",
    "belongs", "catalog", "check_proof", "classify", "congruences", "corpus", "count_sh",
    "enumerate_sh", "eval_term", "find_countermodel", "holds_identity", "instantiate",
    "is_strongly_connexive_matrix", "is_subdirectly_irreducible", "make_chain",
    "parse_identity", "parse_term", "roundtrip_check", "soundness_scan", "to_connexive",
    "to_heyting", "validate_lattice", "validate_sh",
]
