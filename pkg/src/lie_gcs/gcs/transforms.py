"""Automorphism and B-field transformations, transport along isomorphisms and
random almost structures for sweeps."""

import logging
import random
from typing import Any, Dict, List, Mapping, Optional, Sequence

from ..core.matrix import Matrix
from ..core.scalars import qq
from ..exceptions import DimensionError, NotAutomorphismError, NotCocycleError, TransportError
from ..lie.algebra import LieAlgebra, is_automorphism, is_cocycle, is_homomorphism
from .conditions import check_conditions
from .triple import (
    GenEndo,
    Triple,
    build_K,
    canonical_type1,
    complex_triple,
    sign_flip,
    standard_complex,
    symplectic_triple,
)

logger = logging.getLogger(__name__)


def phi(A: Matrix) -> Matrix:
    """``φ(A) = diag(A, (A⁻¹)*)``.

    Raises:
        NotAutomorphismError: If ``A`` is singular.
    """
    inverse = A.inverse()
    if inverse is None:
        raise NotAutomorphismError("Singular matrix cannot act on 𝔤 ⊕ 𝔤*")
    n = A.nrows
    zero = Matrix.zeros(n, n)
    return Matrix.block([[A, zero], [zero, inverse.transpose()]])


def exp_B(B: Matrix) -> Matrix:
    """``exp(B) = [[Id, 0], [B, Id]]``."""
    n = B.nrows
    return Matrix.block([[Matrix.identity(n), Matrix.zeros(n, n)], [B, Matrix.identity(n)]])


def phi_auto(K: GenEndo, A: Matrix, L: Optional[LieAlgebra] = None) -> GenEndo:
    """``φ(A) K φ(A)⁻¹``, blocks ``(AJA⁻¹, ARA*, (A⁻¹)*σA⁻¹)``.

    Raises:
        NotAutomorphismError: If ``A`` is singular or, when ``L`` is given,
            does not preserve its bracket.
    """
    if A.shape != (K.n, K.n):
        raise DimensionError(f"Automorphism of shape {A.shape} for a {K.n}-dim structure")
    if L is not None and not is_automorphism(L, A):
        raise NotAutomorphismError(
            f"Matrix {A.to_list()} is not an automorphism of {L.name or 'the algebra'}")
    forward = phi(A)
    backward = phi(A.inverse())
    return GenEndo(forward @ K.K @ backward)


def b_transform(K: GenEndo, B: Matrix, L: Optional[LieAlgebra] = None) -> GenEndo:
    """``exp(B) K exp(−B)``; blocks ``J − RB``, ``R``, ``BJ + σ − BRB + J*B``.

    Raises:
        NotCocycleError: If ``B`` is not skew or, when ``L`` is given, not closed.
    """
    if B.shape != (K.n, K.n) or not B.is_skew():
        raise NotCocycleError("A B-field must be a skew n×n matrix")
    if L is not None and not is_cocycle(L, B):
        raise NotCocycleError(f"{B.to_list()} is not a 2-cocycle of {L.name or 'the algebra'}")
    return GenEndo(exp_B(B) @ K.K @ exp_B(-B))


def homothety(t: Triple, c: Any) -> Triple:
    """``(J, cR, σ/c)``, conjugation by ``X + ξ ↦ X + ξ/c``."""
    c = qq(c)
    if not c:
        raise DimensionError("Homothety factor must be nonzero")
    return Triple(t.J, t.R.scale(c), t.sigma.scale(1 / c))


def apply_ops(L: Optional[LieAlgebra], t: Triple, ops: Sequence[Mapping[str, Any]]) -> Triple:
    """Apply a recorded sequence of transformations left to right.

    Each op is ``{"op": "phi", "A": Matrix}``, ``{"op": "b", "B": Matrix}``,
    ``{"op": "sign_flip"}`` or ``{"op": "homothety", "c": rational}``. Given
    ``L``, every ``A`` must be an automorphism and every ``B`` a cocycle of it;
    without it the ops act as plain linear maps.
    """
    K = build_K(t)
    for op in ops:
        kind = op["op"]
        if kind == "phi":
            K = phi_auto(K, op["A"], L)
        elif kind == "b":
            K = b_transform(K, op["B"], L)
        elif kind == "sign_flip":
            K = build_K(sign_flip(K.to_triple()))
        elif kind == "homothety":
            K = build_K(homothety(K.to_triple(), op["c"]))
        else:
            raise DimensionError(f"Unknown transformation '{kind}'")
    return K.to_triple()


def transport(P: Matrix, t: Triple, source: LieAlgebra, target: LieAlgebra) -> Triple:
    """Move a structure on ``source`` to ``target`` along the passage matrix ``P``.

    Column ``j`` of ``P`` holds the coordinates of the target basis vector
    ``f_j`` in the source basis, so ``P`` is an isomorphism target → source.
    ``J₁ = P⁻¹J₀P``, ``R₁ = P⁻¹R₀(P⁻¹)ᵗ`` and ``σ₁ = Pᵗσ₀P``.

    Raises:
        TransportError: If ``P`` is not an isomorphism or the image is not
            integrable on ``target``.
    """
    inverse = P.inverse()
    if inverse is None:
        raise TransportError("Passage matrix is singular")
    if not is_homomorphism(target, source, P):
        raise TransportError(
            f"Passage matrix does not carry {target.name or 'target'} brackets "
            f"to {source.name or 'source'}")
    moved = Triple(inverse @ t.J @ P, inverse @ t.R @ inverse.transpose(),
                   P.transpose() @ t.sigma @ P)
    report = check_conditions(target, moved)
    if not report.passed:
        logger.error(f"Transport to {target.name or 'target'} fails {report.failing()}")
        raise TransportError(f"Transported structure is not integrable: failing {report.failing()}")
    return moved


def _random_invertible(rng: random.Random, n: int, bound: int) -> Matrix:
    while True:
        A = Matrix.from_rows([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if A.det():
            return A


def random_skew(rng: random.Random, n: int, bound: int) -> Matrix:
    rows: List[List[int]] = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            value = rng.randint(-bound, bound)
            rows[i][j], rows[j][i] = value, -value
    return Matrix.from_rows(rows)


def canonical_shapes(n: int = 4) -> Dict[str, Triple]:
    """One almost structure of each type for the sweeps."""
    shapes = {"type2": complex_triple(standard_complex(n)),
              "type0": symplectic_triple(standard_complex(n))}
    if n == 4:
        shapes["type1"] = canonical_type1()
    return shapes


def random_c0_triple(rng: random.Random, n: int = 4, bound: int = 2) -> Triple:
    """``exp(B) φ(A) K₀ φ(A)⁻¹ exp(−B)`` for a random canonical shape.

    Both conjugations preserve C0 for arbitrary invertible ``A`` and skew
    ``B``; integrability is only preserved for automorphisms and cocycles.
    """
    shapes = canonical_shapes(n)
    base = shapes[rng.choice(sorted(shapes))]
    K = build_K(base)
    if rng.random() < 0.5:
        K = phi_auto(K, _random_invertible(rng, n, bound))
    if rng.random() < 0.5:
        K = b_transform(K, random_skew(rng, n, bound))
    return K.to_triple()
