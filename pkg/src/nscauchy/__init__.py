"""Non-symmetric Cauchy kernels for the classical groups.

Exact Laurent polynomial arithmetic, Weyl group actions, isobaric divided
differences, key polynomials, Weyl characters, truncated kernel expansions
and the constant-term scalar products that make the key families dual.
"""
from .errors import DomainError, InvariantViolation, ResourceError, StructuralError
from .laurent import LaurentPoly, VarSet, standard_varset
from .divdiff import DividedDifference, pi, pi_hat, pi_last
from .keypoly import KeyIndex, key
from .characters import character, schur_oracle, weyl_denominator
from .kernels import KernelSpec, TruncatedSeries, kernel_series, theorem6_rhs
from .scalarprod import dominance_leq, orthogonality_matrix, scalar
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "DomainError", "InvariantViolation", "ResourceError", "StructuralError",
    "LaurentPoly", "VarSet", "standard_varset",
    "DividedDifference", "pi", "pi_hat", "pi_last",
    "KeyIndex", "key",
    "character", "schur_oracle", "weyl_denominator",
    "KernelSpec", "TruncatedSeries", "kernel_series", "theorem6_rhs",
    "dominance_leq", "orthogonality_matrix", "scalar",
    "VerificationReport",
]
