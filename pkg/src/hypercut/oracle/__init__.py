"""Brute-force ground truth and the exhaustive law verifier."""

from .brute import brute_blocks, brute_components, brute_omega, brute_separating
from .enumerate import EnumSpace, enumerate_space, space_size
from .iso import are_isomorphic, distinct_up_to_isomorphism, find_isomorphism
from .laws import MUTANTS, REGISTRY, Params, cheap_laws, default_laws
from .verify import Failure, LawTally, VerificationReport, verify
from .walkenum import enumerate_closed_trails, enumerate_cycles, on_common_cycle

__all__ = [
    "EnumSpace",
    "Failure",
    "LawTally",
    "MUTANTS",
    "Params",
    "REGISTRY",
    "VerificationReport",
    "are_isomorphic",
    "brute_blocks",
    "brute_components",
    "brute_omega",
    "brute_separating",
    "cheap_laws",
    "default_laws",
    "distinct_up_to_isomorphism",
    "enumerate_closed_trails",
    "enumerate_cycles",
    "enumerate_space",
    "find_isomorphism",
    "on_common_cycle",
    "space_size",
    "verify",
]
