"""Ext^1 of the supersingular Dieudonne module and the ramified module M_{A'}."""

from .extensions import (
    count_extension_classes,
    ext1_dimension_bruteforce,
    ext1_dimension_formula,
    verify_ext1,
)
from .freeness import enumerate_extensions, freeness_witness
from .ramified import RamifiedModuleModel, build_M_Aprime, deformation_bounds, verify_basis_claim

__all__ = [
    "RamifiedModuleModel",
    "build_M_Aprime",
    "count_extension_classes",
    "enumerate_extensions",
    "ext1_dimension_bruteforce",
    "ext1_dimension_formula",
    "freeness_witness",
    "deformation_bounds",
    "verify_basis_claim",
    "verify_ext1",
]
