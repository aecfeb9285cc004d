"""Covariant tensor algebra on R^3 and exact symmetry classes of elasticity tensors."""

__version__ = "0.1.0"

from .classes import SymmetryClass
from .covariants import HarmonicCovariants, boehler, eval_basis
from .elasticity import (
    ElasticityTensor,
    HarmonicDecomposition,
    classify_elasticity,
    decompose,
    explain_elasticity,
    generate_elasticity,
    reconstruct,
)
from .h4classify import classify_h4, classify_joint, generate_normal_form
from .invariants import integrity_basis
from .sym2 import classify_family
from .tensors import SymTensor

__all__ = [
    "ElasticityTensor",
    "HarmonicCovariants",
    "HarmonicDecomposition",
    "SymTensor",
    "SymmetryClass",
    "boehler",
    "classify_elasticity",
    "classify_family",
    "classify_h4",
    "classify_joint",
    "decompose",
    "eval_basis",
    "explain_elasticity",
    "generate_elasticity",
    "generate_normal_form",
    "integrity_basis",
    "reconstruct",
]
