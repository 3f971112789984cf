"""Exact computer algebra for smash products of Hopf algebras with module algebras."""

from .hopf import (BialgebraSpec, HopfSpec, NoAntipodeError, preset_hopf, sweedler,
                   verify_antipode, verify_bialgebra, verify_coalgebra, verify_hopf)
from .kernel import (AlgebraError, InexactNormError, LinComb, ParameterError, Scalar,
                     UndefinedOnBasis, bilinear_extend, combine)
from .modalg import ModuleAlgebraSpec, act, preset_module_algebra, verify_module_algebra
from .qplane import QPlaneElement, from_smash, normalize, qplane_mul, to_smash
from .report import Report
from .seminorm import (NormValue, SeminormFamily, check_submultiplicative, stability_scan,
                       witness_divergence)
from .smash import (proof_identity, smash_mul, stability_constant, tau, verify_associativity,
                    verify_embeddings)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError", "BialgebraSpec", "HopfSpec", "InexactNormError", "LinComb",
    "ModuleAlgebraSpec", "NoAntipodeError", "NormValue", "ParameterError", "QPlaneElement",
    "Report", "Scalar", "SeminormFamily", "UndefinedOnBasis", "act", "bilinear_extend",
    "check_submultiplicative", "combine", "from_smash", "normalize", "preset_hopf",
    "preset_module_algebra", "proof_identity", "qplane_mul", "smash_mul", "stability_constant",
    "stability_scan", "sweedler", "tau", "to_smash", "verify_antipode", "verify_associativity",
    "verify_bialgebra", "verify_coalgebra", "verify_embeddings", "verify_hopf",
    "verify_module_algebra", "witness_divergence",
]
