"""Exact scalars and linear algebra over ℚ and ℚ(i)."""

from .congruence import Signature, congruence_diagonalize, is_positive_definite, signature
from .matrix import E, Matrix, Vector, kernel_basis, pivots, rank, rref, skew_unit, solve
from .scalars import (
    conj,
    decode_scalar,
    encode_scalar,
    from_sympy,
    gauss,
    lift,
    qq,
)
from .subspace import (
    Subspace,
    column_space,
    kernel,
    quotient_dim,
    subspace_intersect,
    subspace_sum,
)

__all__ = [
    "E",
    "Matrix",
    "Signature",
    "Subspace",
    "Vector",
    "column_space",
    "congruence_diagonalize",
    "conj",
    "decode_scalar",
    "encode_scalar",
    "from_sympy",
    "gauss",
    "is_positive_definite",
    "kernel",
    "kernel_basis",
    "lift",
    "pivots",
    "qq",
    "quotient_dim",
    "rank",
    "rref",
    "signature",
    "skew_unit",
    "solve",
    "subspace_intersect",
    "subspace_sum",
]
