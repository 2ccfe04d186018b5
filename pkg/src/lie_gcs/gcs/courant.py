"""The Courant bracket on 𝔤 ⊕ 𝔤* and the Nijenhuis torsions built from it."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from ..core.matrix import Matrix, Vector
from ..core.scalars import lift
from ..exceptions import DimensionError
from ..exterior.forms import GenVector
from ..lie.algebra import LieAlgebra, basis_vector, bracket, coad_matrix
from .triple import GenEndo

logger = logging.getLogger(__name__)


def _complex(*vectors: Sequence[Any]) -> bool:
    return any(isinstance(x, QQ_I.dtype) for v in vectors for x in v)


def combine(*terms: Tuple[Any, Sequence[Any]]) -> Vector:
    """``Σ c·v`` over ``(c, v)`` pairs, staying in ℚ when every input is real."""
    vectors = [v for _, v in terms]
    coeffs = [c for c, _ in terms]
    complex_mode = _complex(*vectors, coeffs)
    zero = QQ_I.zero if complex_mode else QQ.zero
    out = [zero] * len(vectors[0])
    for c, v in terms:
        if len(v) != len(out):
            raise DimensionError(f"Cannot combine vectors of lengths {len(out)} and {len(v)}")
        if complex_mode:
            c = lift(c)
        for k, x in enumerate(v):
            if x:
                out[k] = out[k] + c * (lift(x) if complex_mode else x)
    return tuple(out)


def gen_combine(*terms: Tuple[Any, GenVector]) -> GenVector:
    return GenVector.from_tuple(combine(*((c, v.to_tuple()) for c, v in terms)))


def courant_bracket(L: LieAlgebra, a: GenVector, b: GenVector) -> GenVector:
    """``[u+α, v+β] = [u, v] + ad_u^t β − ad_v^t α``.

    On constant sections over a Lie algebra the Dorfman and Courant brackets
    coincide, so this is also skew.
    """
    if a.dim != L.dim or b.dim != L.dim:
        raise DimensionError(
            f"Generalized vectors of dims {a.dim}, {b.dim} on a {L.dim}-dim algebra")
    X = bracket(L, a.X, b.X)
    first = coad_matrix(L, a.X).apply(b.xi)
    second = coad_matrix(L, b.X).apply(a.xi)
    xi = combine((1, first), (-1, second))
    if _complex(X) != _complex(xi):
        X, xi = tuple(lift(x) for x in X), tuple(lift(x) for x in xi)
    return GenVector(X, xi)


def neutral_pairing(a: GenVector, b: GenVector) -> Any:
    """``⟨X+α, Y+β⟩ = ½(α(Y) + β(X))``."""
    if a.dim != b.dim:
        raise DimensionError(f"Pairing of {a.dim}- and {b.dim}-dim generalized vectors")
    complex_mode = _complex(a.to_tuple(), b.to_tuple())
    conv = lift if complex_mode else (lambda x: x)
    zero = QQ_I.zero if complex_mode else QQ.zero
    total = zero
    for x, y in zip(a.xi, b.X):
        total += conv(x) * conv(y)
    for x, y in zip(b.xi, a.X):
        total += conv(x) * conv(y)
    return total * (lift(QQ(1, 2)) if complex_mode else QQ(1, 2))


def apply_K(K: GenEndo, a: GenVector) -> GenVector:
    return GenVector.from_tuple(K.K.apply(a.to_tuple()))


def gen_basis(n: int) -> List[GenVector]:
    """``e_1, …, e_n, f^1, …, f^n`` as generalized vectors."""
    units = [basis_vector(2 * n, k) for k in range(1, 2 * n + 1)]
    return [GenVector.from_tuple(u) for u in units]


@dataclass
class TorsionReport:
    """Vanishing of a torsion tensor on basis pairs (1-based indices)."""
    passed: bool
    nonzero: List[Tuple[Tuple[int, int], Vector]] = field(default_factory=list)

    @property
    def witness(self) -> Optional[Tuple[Tuple[int, int], Vector]]:
        """The pair whose residual has the most nonzero entries."""
        if not self.nonzero:
            return None
        return max(self.nonzero, key=lambda item: sum(1 for x in item[1] if x))


def nijenhuis_K(L: LieAlgebra, K: GenEndo, a: GenVector, b: GenVector) -> GenVector:
    """``[Ka, Kb] − K[Ka, b] − K[a, Kb] + K²[a, b]``."""
    Ka, Kb = apply_K(K, a), apply_K(K, b)
    ab = courant_bracket(L, a, b)
    return gen_combine(
        (1, courant_bracket(L, Ka, Kb)),
        (-1, apply_K(K, courant_bracket(L, Ka, b))),
        (-1, apply_K(K, courant_bracket(L, a, Kb))),
        (1, apply_K(K, apply_K(K, ab))),
    )


def nijenhuis_K_report(L: LieAlgebra, K: GenEndo) -> TorsionReport:
    if K.n != L.dim:
        raise DimensionError(f"{2 * K.n}×{2 * K.n} endomorphism on a {L.dim}-dim algebra")
    basis = gen_basis(L.dim)
    report = TorsionReport(passed=True)
    for i, j in combinations(range(2 * L.dim), 2):
        residual = nijenhuis_K(L, K, basis[i], basis[j])
        if not residual.is_zero():
            report.passed = False
            report.nonzero.append(((i + 1, j + 1), residual.to_tuple()))
    if not report.passed:
        logger.debug(f"N_K nonzero on {len(report.nonzero)} basis pairs of {L.name or 'algebra'}")
    return report


def integrable_via_NK(L: LieAlgebra, K: GenEndo) -> bool:
    return nijenhuis_K_report(L, K).passed


def nijenhuis_J_pair(L: LieAlgebra, J: Matrix, u: Sequence[Any], v: Sequence[Any]) -> Vector:
    """``[Ju, Jv] − J[Ju, v] − J[u, Jv] + J²[u, v]``."""
    Ju, Jv = J.apply(u), J.apply(v)
    return combine(
        (1, bracket(L, Ju, Jv)),
        (-1, J.apply(bracket(L, Ju, v))),
        (-1, J.apply(bracket(L, u, Jv))),
        (1, J.apply(J.apply(bracket(L, u, v)))),
    )


def nijenhuis_J(L: LieAlgebra, J: Matrix) -> TorsionReport:
    """Classical Nijenhuis torsion of ``J`` on all basis pairs."""
    if J.shape != (L.dim, L.dim):
        raise DimensionError(f"J of shape {J.shape} on a {L.dim}-dim algebra")
    n = L.dim
    report = TorsionReport(passed=True)
    for i, j in combinations(range(1, n + 1), 2):
        residual = nijenhuis_J_pair(L, J, basis_vector(n, i), basis_vector(n, j))
        if any(residual):
            report.passed = False
            report.nonzero.append(((i, j), residual))
    return report
