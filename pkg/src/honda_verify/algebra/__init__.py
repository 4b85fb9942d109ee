"""Finite fields, the coefficient algebra k (x) F and truncated Witt vectors."""

from .finite_field import GF, FieldElement, FiniteField, MAX_ALGEBRA_PRIME
from .tensor_algebra import TensorAlgebra
from .witt import (
    WittVector,
    teichmuller,
    truncated_covector_addition_poly,
    verify_ghost_identity,
    verify_truncation_congruence,
    witt_sum_polynomials,
)

__all__ = [
    "GF",
    "FieldElement",
    "FiniteField",
    "MAX_ALGEBRA_PRIME",
    "TensorAlgebra",
    "WittVector",
    "teichmuller",
    "truncated_covector_addition_poly",
    "verify_ghost_identity",
    "verify_truncation_congruence",
    "witt_sum_polynomials",
]
