"""Witt covector groups over finite monomial algebras."""

from .covector import (
    Covector,
    Tail,
    ZERO_TAIL,
    covector_add,
    covector_multiple,
    frobenius_cw,
    scalar_action,
    verschiebung_cw,
)
from .nilpotent_algebra import AlgebraElement, NilpotentAlgebra

__all__ = [
    "AlgebraElement",
    "Covector",
    "NilpotentAlgebra",
    "Tail",
    "ZERO_TAIL",
    "covector_add",
    "covector_multiple",
    "frobenius_cw",
    "scalar_action",
    "verschiebung_cw",
]
