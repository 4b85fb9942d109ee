"""Raynaud schemes, the Dieudonne module of their special fibre and Honda systems."""

from .dieudonne import (
    DieudonneModule,
    dieudonne_covectors,
    dieudonne_module,
    verify_bialgebra_laws,
    verify_generator_identity,
    verify_hom_condition,
    verify_module,
)
from .honda import HondaSystem, honda_system, verify_honda
from .scheme import RaynaudScheme, coordinate_ring, parse_delta

__all__ = [
    "DieudonneModule",
    "HondaSystem",
    "RaynaudScheme",
    "coordinate_ring",
    "dieudonne_covectors",
    "dieudonne_module",
    "honda_system",
    "parse_delta",
    "verify_bialgebra_laws",
    "verify_generator_identity",
    "verify_hom_condition",
    "verify_honda",
    "verify_module",
]
