"""Generalized Kähler pairs: commuting structures and the metric they define."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..core.congruence import Signature, signature
from ..core.matrix import Matrix, rank
from ..core.subspace import column_space, subspace_intersect
from ..exceptions import ConsistencyError, DimensionError, DomainError
from ..exterior.forms import GenVector
from ..lie.algebra import LieAlgebra
from ..gcs.conditions import check_conditions
from ..gcs.courant import gen_basis, gen_combine
from ..gcs.triple import GenEndo, Triple, build_K, complex_triple, neutral_gram, type_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KahlerPair:
    """Two generalized complex structures on the same algebra.

    Construction only checks that ``K₁`` and ``K₂`` commute; integrability
    and positivity are reported by :func:`verify_pair`.
    """
    L: LieAlgebra
    first: Triple
    second: Triple

    def __post_init__(self) -> None:
        n = self.L.dim
        if self.first.n != n or self.second.n != n:
            raise DimensionError(
                f"Pair of {self.first.n}- and {self.second.n}-dim triples on a {n}-dim algebra")
        if not (self.K1 @ self.K2 - self.K2 @ self.K1).is_zero():
            raise DomainError("K₁K₂ ≠ K₂K₁: not a commuting pair")

    @property
    def K1(self) -> GenEndo:
        return build_K(self.first)

    @property
    def K2(self) -> GenEndo:
        return build_K(self.second)

    @property
    def n(self) -> int:
        return self.L.dim

    def swapped(self) -> "KahlerPair":
        return KahlerPair(self.L, self.second, self.first)


def commutes(t1: Triple, t2: Triple) -> bool:
    K1, K2 = build_K(t1), build_K(t2)
    return (K1 @ K2 - K2 @ K1).is_zero()


def metric_G(p: KahlerPair) -> Matrix:
    """Gram matrix of ``G(u, v) = ⟨K₁K₂u, v⟩`` for the neutral pairing.

    Raises:
        ConsistencyError: If the result is not symmetric, which would mean
            one of the structures is not skew for the pairing.
    """
    G = (p.K1 @ p.K2).transpose() @ neutral_gram(p.n)
    if not G.is_symmetric():
        raise ConsistencyError("G is not symmetric for a commuting pair")
    return G


def metric_signature(p: KahlerPair) -> Signature:
    return signature(metric_G(p))


def is_positive(p: KahlerPair) -> bool:
    """Positivity of ``G`` through its congruence signature."""
    sig = metric_signature(p)
    logger.debug(f"{p.L.name or 'algebra'}: G has signature {sig.as_tuple()}")
    return sig.is_positive_definite


def _dual_pairing(alpha: Sequence[Any], X: Sequence[Any]) -> Any:
    return sum((a * x for a, x in zip(alpha, X)), QQ.zero)


def eq13_expression(p: KahlerPair, X: Sequence[Any], xi: Sequence[Any]) -> Any:
    """``⟨J₂*ξ − σ₂X, J₁X + R₁ξ⟩ + ⟨J₁*ξ − σ₁X, J₂X + R₂ξ⟩`` with the duality pairing.

    With the neutral pairing carrying a factor ½ this equals ``2·G(X + ξ, X + ξ)``.
    """
    total = QQ.zero
    for a, b in ((p.second, p.first), (p.first, p.second)):
        covector = [s - t for s, t in zip(a.J_star.apply(xi), a.sigma.apply(X))]
        vector = [s + t for s, t in zip(b.J.apply(X), b.R.apply(xi))]
        total += _dual_pairing(covector, vector)
    return total


def basis_samples(n: int) -> List[GenVector]:
    """Basis vectors of 𝔤 ⊕ 𝔤* together with all sums of two of them."""
    basis = gen_basis(n)
    samples = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            samples.append(gen_combine((1, basis[i]), (1, basis[j])))
    return samples


def eq13_check(p: KahlerPair, samples: Optional[Sequence[GenVector]] = None) -> bool:
    """Whether the pointwise expression is strictly positive on every sample.

    Each value is compared with ``2·G(v, v)``.

    Raises:
        DomainError: On a zero sample.
        ConsistencyError: If a value disagrees with the metric ``G``.
    """
    G = metric_G(p)
    n = p.n
    for v in samples if samples is not None else basis_samples(n):
        if v.is_zero():
            raise DomainError("Pointwise positivity samples must be nonzero")
        flat = v.to_tuple()
        X, xi = flat[:n], flat[n:]
        value = eq13_expression(p, X, xi)
        expected = 2 * _dual_pairing(G.apply(flat), flat)
        if value != expected:
            logger.error(f"Pointwise expression gives {value} at {flat}, 2G gives {expected}")
            raise ConsistencyError("Pointwise expression disagrees with 2·G")
        if value <= 0:
            logger.debug(f"Pointwise positivity fails at {flat}: {value}")
            return False
    return True


@dataclass
class Prop41Report:
    """Type constraint on a positive pair and the image condition for type (1, 1)."""
    types: Tuple[int, int]
    positive: bool
    type_allowed: bool
    images_disjoint: Optional[bool] = None
    type2_reduction: Optional[bool] = None

    @property
    def passed(self) -> bool:
        if not self.positive:
            return True
        return (self.type_allowed and self.images_disjoint is not False
                and self.type2_reduction is not False)

    @property
    def violates(self) -> bool:
        """The pair breaks the constraints a positive pair must satisfy."""
        return (not self.type_allowed or self.images_disjoint is False
                or self.type2_reduction is False)


_ALLOWED_TYPES = {(0, 0), (1, 1), (2, 0), (0, 2)}


def prop41_constraints(p: KahlerPair) -> Prop41Report:
    """Types ``(0, 0)``, ``(1, 1)`` or ``(2, 0)`` up to order; ``Im R₁ ∩ Im R₂ = 0``
    for ``(1, 1)``."""
    types = (type_of(p.first), type_of(p.second))
    report = Prop41Report(types=types, positive=is_positive(p),
                          type_allowed=types in _ALLOWED_TYPES)
    if types == (1, 1):
        shared = subspace_intersect(column_space(p.first.R), column_space(p.second.R))
        report.images_disjoint = shared.dim == 0
    report.type2_reduction = type2_reduction(p)
    if report.positive and report.violates:
        logger.error(
            f"{p.L.name or 'algebra'}: positive pair of types {types} violates the constraints")
        raise ConsistencyError(f"Positive pair of types {types} breaks the type constraints")
    return report


def type2_reduction(p: KahlerPair) -> Optional[bool]:
    """``R₁ = 0`` forces ``R₂`` invertible in a positive pair; ``None`` when neither R vanishes."""
    for a, b in ((p.first, p.second), (p.second, p.first)):
        if a.R.is_zero():
            return rank(b.R) == p.n
    return None


def classical_kahler_pair(L: LieAlgebra, J: Matrix, omega: Matrix) -> KahlerPair:
    """``(K^J, K^ω)`` built from a complex structure and a 2-form.

    Raises:
        DomainError: If ``ω`` is degenerate or the two structures do not commute.
    """
    inverse = omega.inverse()
    if inverse is None:
        raise DomainError("ω must be nondegenerate")
    n = J.nrows
    symplectic = Triple(Matrix.zeros(n, n), -inverse, omega)
    return KahlerPair(L, complex_triple(J), symplectic)


@dataclass
class PairVerification:
    """Everything checked for a candidate generalized Kähler pair."""
    integrable: Tuple[bool, bool]
    signature: Tuple[int, int, int]
    positive: bool
    eq13: bool
    prop41: Prop41Report
    failures: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.integrable) and self.positive and self.eq13 and self.prop41.passed


def verify_pair(p: KahlerPair) -> PairVerification:
    """Integrability of both structures, signature of ``G``, pointwise positivity and
    the type constraints."""
    first, second = check_conditions(p.L, p.first), check_conditions(p.L, p.second)
    sig = metric_signature(p)
    result = PairVerification(
        integrable=(first.passed, second.passed),
        signature=sig.as_tuple(),
        positive=sig.is_positive_definite,
        eq13=eq13_check(p),
        prop41=prop41_constraints(p),
    )
    if not first.passed:
        result.failures["first"] = first.failing()
    if not second.passed:
        result.failures["second"] = second.failing()
    logger.debug(f"{p.L.name or 'algebra'}: pair verification {result.passed}, "
                 f"signature {result.signature}")
    return result
