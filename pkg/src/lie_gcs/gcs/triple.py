"""Triples (J, R, σ) and the generalized endomorphism they assemble into.

Matrix conventions: ``E(i, j)`` sends ``e_j`` to ``e_i``; the bivector
``f_{ij}^#`` and the 2-form ``f^{ij}_#`` share the matrix with entry
``[j][i] = 1`` and ``[i][j] = −1``; ``J*`` is the transpose of ``J``.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from sympy.polys.domains import QQ

from ..core.expressions import indexed_terms
from ..core.matrix import E, Matrix, rank, skew_unit
from ..core.scalars import qq
from ..core.subspace import Subspace, column_space, kernel, subspace_intersect
from ..exceptions import ConsistencyError, DimensionError, DomainError

logger = logging.getLogger(__name__)


def bivector_sharp(i: int, j: int, n: int = 4) -> Matrix:
    """Matrix of ``f_{ij}^#`` as a map 𝔤* → 𝔤."""
    return skew_unit(i, j, n)


def form_flat(i: int, j: int, n: int = 4) -> Matrix:
    """Matrix of ``f^{ij}_#`` as a map 𝔤 → 𝔤*."""
    return skew_unit(i, j, n)


def endomorphism_from_text(text: str, n: int = 4,
                           bindings: Optional[Mapping[str, Any]] = None) -> Matrix:
    """Parse ``"lam*(E11 + E44) + E23 - E32"`` into a matrix."""
    result = Matrix.zeros(n, n)
    for idx, c in indexed_terms(text, "E", 2, n, bindings or {}).items():
        if not idx:
            raise DomainError(f"Constant term in endomorphism '{text}'")
        result = result + E(idx[0], idx[1], n).scale(c)
    return result


def skew_from_text(text: str, n: int = 4,
                   bindings: Optional[Mapping[str, Any]] = None) -> Matrix:
    """Parse ``"-k*f14 + f23"`` into the skew matrix of ``Σ c f_{ij}^#``."""
    result = Matrix.zeros(n, n)
    for idx, c in indexed_terms(text, "f", 2, n, bindings or {}).items():
        if not idx:
            raise DomainError(f"Constant term in skew map '{text}'")
        result = result + skew_unit(idx[0], idx[1], n).scale(c)
    return result


@dataclass(frozen=True)
class GenEndo:
    """``K = [[J, R], [σ, −J*]]`` on 𝔤 ⊕ 𝔤*."""
    K: Matrix

    def __post_init__(self) -> None:
        if not self.K.is_square or self.K.nrows % 2:
            raise DimensionError(f"Generalized endomorphism of shape {self.K.shape}")

    @property
    def n(self) -> int:
        return self.K.nrows // 2

    def block(self, r: int, c: int) -> Matrix:
        n = self.n
        return self.K.submatrix(range(r * n, (r + 1) * n), range(c * n, (c + 1) * n))

    def to_triple(self) -> "Triple":
        """Read ``(J, R, σ)`` back; the lower-right block is not re-checked."""
        return Triple(self.block(0, 0), self.block(0, 1), self.block(1, 0))

    def __matmul__(self, other: "GenEndo") -> Matrix:
        return self.K @ other.K


@dataclass(frozen=True)
class Triple:
    """A triple (J, R, σ) on an ``n``-dimensional Lie algebra.

    Raises:
        DimensionError: If the blocks are not ``n × n``.
        DomainError: If ``R`` or ``σ`` is not skew.
    """
    J: Matrix
    R: Matrix
    sigma: Matrix

    def __post_init__(self) -> None:
        n = self.J.nrows
        for name, m in (("J", self.J), ("R", self.R), ("sigma", self.sigma)):
            if m.shape != (n, n):
                raise DimensionError(f"{name} has shape {m.shape}, expected {(n, n)}")
        if not self.R.is_skew():
            raise DomainError("R must be skew")
        if not self.sigma.is_skew():
            raise DomainError("sigma must be skew")

    @property
    def n(self) -> int:
        return self.J.nrows

    @property
    def J_star(self) -> Matrix:
        return self.J.transpose()

    @classmethod
    def from_text(cls, J: str, R: str, sigma: str, n: int = 4,
                  bindings: Optional[Mapping[str, Any]] = None) -> "Triple":
        return cls(endomorphism_from_text(J, n, bindings), skew_from_text(R, n, bindings),
                   skew_from_text(sigma, n, bindings))


def build_K(t: Triple) -> GenEndo:
    return GenEndo(Matrix.block([[t.J, t.R], [t.sigma, -t.J_star]]))


def neutral_gram(n: int) -> Matrix:
    """Gram matrix of ``⟨X+α, Y+β⟩ = ½(α(Y) + β(X))``."""
    half = Matrix.identity(n).scale(qq("1/2"))
    zero = Matrix.zeros(n, n)
    return Matrix.block([[zero, half], [half, zero]])


@dataclass
class AlmostReport:
    """Algebraic conditions on a triple; ``passed`` iff all hold."""
    K_squared: bool
    skew: bool
    c0_square: bool
    c0_JR: bool
    c0_sigmaJ: bool
    passed: bool = False
    witnesses: Dict[str, Matrix] = field(default_factory=dict)

    @property
    def c0(self) -> bool:
        return self.c0_square and self.c0_JR and self.c0_sigmaJ


def almost_check(t: Triple) -> AlmostReport:
    """Check ``K² = −Id``, skewness of ``K`` and condition C0.

    Raises:
        ConsistencyError: If the K-level and block-level answers disagree.
    """
    n = t.n
    K = build_K(t).K
    minus_id = -Matrix.identity(2 * n)
    square = K @ K
    gram = neutral_gram(n)
    skew_residual = K.transpose() @ gram + gram @ K
    c0_square = t.J @ t.J + t.R @ t.sigma
    c0_JR = t.J @ t.R - t.R @ t.J_star
    c0_sigmaJ = t.sigma @ t.J - t.J_star @ t.sigma
    report = AlmostReport(
        K_squared=(square - minus_id).is_zero(),
        skew=skew_residual.is_zero(),
        c0_square=(c0_square + Matrix.identity(n)).is_zero(),
        c0_JR=c0_JR.is_zero(),
        c0_sigmaJ=c0_sigmaJ.is_zero(),
    )
    report.passed = report.K_squared and report.skew and report.c0
    if report.K_squared != report.c0:
        raise ConsistencyError("K² = −Id and condition C0 disagree on a skew triple")
    if not report.passed:
        report.witnesses = {"K_squared_plus_id": square - minus_id,
                            "J2_plus_Rsigma_plus_id": c0_square + Matrix.identity(n),
                            "JR_minus_RJstar": c0_JR, "sigmaJ_minus_Jstar_sigma": c0_sigmaJ}
    return report


def h_annihilator(t: Triple) -> Subspace:
    """𝔥⁰, the annihilator of ``Im R``; equal to ``ker R`` for skew ``R``."""
    return kernel(t.R)


def type_of(t: Triple) -> int:
    """Half the dimension of ``𝔤* ∩ K(𝔤*)``.

    Raises:
        ConsistencyError: If the two computations of the type disagree.
    """
    n = t.n
    K = build_K(t).K
    covectors = Subspace.span([tuple(QQ.one if k == n + i else QQ.zero for k in range(2 * n))
                               for i in range(n)], 2 * n)
    image = column_space(K.submatrix(range(2 * n), range(n, 2 * n)))
    meet = subspace_intersect(covectors, image).dim
    annihilator = h_annihilator(t).dim
    if meet != annihilator or (n - rank(t.R)) != annihilator or meet % 2:
        raise ConsistencyError(
            f"Type mismatch: dim 𝔤*∩K𝔤* = {meet}, dim 𝔥⁰ = {annihilator}, rank R = {rank(t.R)}")
    return meet // 2


def complex_triple(J: Matrix) -> Triple:
    """The type-2 structure ``K^J`` of a complex structure ``J``."""
    n = J.nrows
    return Triple(J, Matrix.zeros(n, n), Matrix.zeros(n, n))


def symplectic_triple(omega: Matrix) -> Triple:
    """The type-0 structure ``K^ω`` with ``R = −ω⁻¹`` and ``σ = ω``.

    Raises:
        DomainError: If ``ω`` is degenerate or not skew.
    """
    inverse = omega.inverse()
    if inverse is None or not omega.is_skew():
        raise DomainError("A symplectic form must be skew and nondegenerate")
    n = omega.nrows
    return Triple(Matrix.zeros(n, n), -inverse, omega)


def canonical_type1(lam: Any = 0, a: Any = 1) -> Triple:
    """``J = λ(E11+E22) + E34 − E43``, ``R = a·e12^#``, ``σ = a⁻¹(1+λ²)·e^{12}_#``."""
    lam, a = qq(lam), qq(a)
    if not a:
        raise DomainError("The scale a must be nonzero")
    J = (E(1, 1) + E(2, 2)).scale(lam) + E(3, 4) - E(4, 3)
    return Triple(J, bivector_sharp(1, 2).scale(a),
                  form_flat(1, 2).scale((1 + lam * lam) / a))


def sign_flip(t: Triple) -> Triple:
    """``(J, −R, −σ)``: conjugation by the bracket automorphism ``u + α ↦ u − α``."""
    return Triple(t.J, -t.R, -t.sigma)


def negate(t: Triple) -> Triple:
    """The structure ``−K``."""
    return Triple(-t.J, -t.R, -t.sigma)


def standard_complex(n: int = 4) -> Matrix:
    """``E21 − E12 + E43 − E34 + …``, the block-diagonal square root of −Id."""
    result = Matrix.zeros(n, n)
    for k in range(1, n, 2):
        result = result + E(k + 1, k, n) - E(k, k + 1, n)
    return result


def triple_rows(t: Triple) -> List[List[List[Any]]]:
    return [t.J.to_list(), t.R.to_list(), t.sigma.to_list()]


def unpack(K: Matrix) -> Tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four ``n × n`` blocks of a ``2n × 2n`` matrix."""
    g = GenEndo(K)
    return g.block(0, 0), g.block(0, 1), g.block(1, 0), g.block(1, 1)
