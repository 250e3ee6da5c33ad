"""char2lie: exact computation with Lie algebras over fields of characteristic 2."""

from .field import GF2, GF2k
from .liealg import (
    AlgebraTable,
    AssocTable,
    RestrictedAlgebra,
    SearchSpaceTooLarge,
    ValidationReport,
    divided_power_o12,
    sl2_char2,
    subalgebra_table,
    tensor_product_lie,
    two_envelope,
)
from .linalg import IncrementalSpan, LinearMap, Subspace, compose, meet_join, rref, solve, subspace_canonical

__all__ = [
    "GF2",
    "GF2k",
    "AlgebraTable",
    "AssocTable",
    "RestrictedAlgebra",
    "SearchSpaceTooLarge",
    "ValidationReport",
    "divided_power_o12",
    "sl2_char2",
    "subalgebra_table",
    "tensor_product_lie",
    "two_envelope",
    "IncrementalSpan",
    "LinearMap",
    "Subspace",
    "compose",
    "meet_join",
    "rref",
    "solve",
    "subspace_canonical",
]

__version__ = "0.1.0"
