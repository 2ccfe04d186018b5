"""Lie algebras given by structure constants."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from ..core.matrix import Matrix, Vector, kernel_basis, skew_unit
from ..core.scalars import lift, qq
from ..core.subspace import Subspace
from ..exceptions import DimensionError, DomainError

logger = logging.getLogger(__name__)

BracketTable = Mapping[Tuple[int, int], Sequence[Any]]


@dataclass
class JacobiReport:
    """Result of a Jacobi identity check."""
    passed: bool
    violations: List[Tuple[Tuple[int, int, int], Vector]] = field(default_factory=list)


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``c[i][j][k]`` with ``[e_i, e_j] = Σ_k c[i][j][k] e_k``.

    Indices are 0-based internally; ``from_brackets`` takes the 1-based
    labels used in the tables.
    """
    dim: int
    c: Tuple[Tuple[Vector, ...], ...]
    name: str = ""

    @classmethod
    def from_brackets(cls, dim: int, brackets: BracketTable, name: str = "",
                      unchecked: bool = False) -> "LieAlgebra":
        """Build an algebra from its nonzero brackets.

        Args:
            dim: Dimension n
            brackets: ``{(i, j): coefficients}`` with 1-based ``i < j`` or ``i > j``
            name: Display name
            unchecked: Skip the Jacobi check (for negative tests)

        Raises:
            DimensionError: On malformed indices or coefficient vectors.
            DomainError: If the Jacobi identity fails and ``unchecked`` is false.
        """
        c = [[[QQ.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (1 <= i <= dim and 1 <= j <= dim) or i == j:
                raise DimensionError(f"Invalid bracket index ({i}, {j})")
            if len(coeffs) != dim:
                raise DimensionError(f"Bracket [e{i}, e{j}] needs {dim} coefficients")
            for k, value in enumerate(coeffs):
                value = qq(value)
                c[i - 1][j - 1][k] = value
                c[j - 1][i - 1][k] = -value
        algebra = cls(dim, tuple(tuple(tuple(row) for row in plane) for plane in c), name)
        if not unchecked:
            report = jacobi_check(algebra)
            if not report.passed:
                triple, residual = report.violations[0]
                raise DomainError(
                    f"Jacobi identity fails for {name or 'algebra'} on {triple}: {residual}")
        return algebra

    @classmethod
    def abelian(cls, dim: int = 4) -> "LieAlgebra":
        return cls.from_brackets(dim, {}, name=f"{dim}A1")

    def nonzero_brackets(self) -> Dict[Tuple[int, int], Vector]:
        """1-based ``{(i, j): [e_i, e_j]}`` for ``i < j`` with nonzero bracket."""
        return {(i + 1, j + 1): self.c[i][j]
                for i, j in combinations(range(self.dim), 2) if any(self.c[i][j])}


def _check_vector(L: LieAlgebra, v: Sequence[Any]) -> None:
    if len(v) != L.dim:
        raise DimensionError(f"Vector of length {len(v)} in a {L.dim}-dim algebra")


def bracket(L: LieAlgebra, u: Sequence[Any], v: Sequence[Any]) -> Vector:
    """Bilinear extension of the structure constants.

    Works for rational and Gaussian-rational coordinates alike.
    """
    _check_vector(L, u)
    _check_vector(L, v)
    if any(isinstance(x, QQ_I.dtype) for x in (*u, *v)):
        u, v = [lift(x) for x in u], [lift(x) for x in v]
        zero, convert = QQ_I.zero, lift
    else:
        zero, convert = QQ.zero, qq
    out = [zero] * L.dim
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj or i == j:
                continue
            coeff = ui * vj
            for k, ck in enumerate(L.c[i][j]):
                if ck:
                    out[k] = out[k] + coeff * convert(ck)
    return tuple(out)


def basis_vector(n: int, i: int) -> Vector:
    """``e_i`` with a 1-based index."""
    return tuple(QQ.one if k == i - 1 else QQ.zero for k in range(n))


def jacobi_check(L: LieAlgebra) -> JacobiReport:
    """Check ``Σ_cyc [[e_i, e_j], e_k] = 0`` for all ``i < j < k``."""
    n = L.dim
    report = JacobiReport(passed=True)
    for i, j, k in combinations(range(1, n + 1), 3):
        ei, ej, ek = basis_vector(n, i), basis_vector(n, j), basis_vector(n, k)
        terms = (
            bracket(L, bracket(L, ei, ej), ek),
            bracket(L, bracket(L, ej, ek), ei),
            bracket(L, bracket(L, ek, ei), ej),
        )
        residual = tuple(a + b + c for a, b, c in zip(*terms))
        if any(residual):
            report.passed = False
            report.violations.append(((i, j, k), residual))
    if not report.passed:
        logger.debug(f"Jacobi violations in {L.name or 'algebra'}: {len(report.violations)}")
    return report


def ad_matrix(L: LieAlgebra, u: Sequence[Any]) -> Matrix:
    """Matrix of ``ad_u``: column ``j`` is ``[u, e_j]``."""
    domain = QQ_I if any(isinstance(x, QQ_I.dtype) for x in u) else QQ
    return Matrix.from_columns(
        [bracket(L, u, basis_vector(L.dim, j)) for j in range(1, L.dim + 1)], domain)


def coad_matrix(L: LieAlgebra, u: Sequence[Any]) -> Matrix:
    """Matrix of ``ad_u^t = −(ad_u)ᵀ`` on 𝔤* in the dual basis."""
    return -ad_matrix(L, u).transpose()


def is_unimodular(L: LieAlgebra) -> bool:
    return all(not ad_matrix(L, basis_vector(L.dim, i)).trace()
               for i in range(1, L.dim + 1))


def killing_form(L: LieAlgebra) -> Matrix:
    """Gram matrix of ``Q(u, v) = tr(ad_u ∘ ad_v)`` on the basis."""
    ads = [ad_matrix(L, basis_vector(L.dim, i)) for i in range(1, L.dim + 1)]
    return Matrix.from_rows([[(a @ b).trace() for b in ads] for a in ads])


def killing_restriction(L: LieAlgebra, basis: Sequence[Sequence[Any]]) -> Matrix:
    """Killing form restricted to ``span(basis)``, expressed in that basis."""
    q = killing_form(L)
    vectors = [tuple(qq(x) for x in v) for v in basis]
    return Matrix.from_rows([[sum((a * b for a, b in zip(u, q.apply(v))), QQ.zero)
                              for v in vectors] for u in vectors])


def derived_subalgebra(L: LieAlgebra) -> Subspace:
    return Subspace.span(
        [L.c[i][j] for i, j in combinations(range(L.dim), 2)], L.dim)


def is_automorphism(L: LieAlgebra, A: Matrix) -> bool:
    """True iff ``A`` is invertible and ``A[u, v] = [Au, Av]`` on basis pairs."""
    if A.shape != (L.dim, L.dim):
        raise DimensionError(f"Automorphism candidate of shape {A.shape}")
    if A.inverse() is None:
        return False
    return is_homomorphism(L, L, A)


def is_homomorphism(source: LieAlgebra, target: LieAlgebra, A: Matrix) -> bool:
    """True iff ``A[u, v]_source = [Au, Av]_target`` on basis pairs."""
    n = source.dim
    for i, j in combinations(range(1, n + 1), 2):
        ei, ej = basis_vector(n, i), basis_vector(n, j)
        if A.apply(bracket(source, ei, ej)) != bracket(target, A.apply(ei), A.apply(ej)):
            return False
    return True


def cocycle_residual(L: LieAlgebra, B: Matrix, triple: Tuple[int, int, int]) -> Any:
    """``⟨B[u,v],w⟩ + ⟨B[v,w],u⟩ + ⟨B[w,u],v⟩`` on a 1-based basis triple."""
    n = L.dim
    u, v, w = (basis_vector(n, t) for t in triple)

    def pair(x: Vector, y: Vector) -> Any:
        bx = B.apply(x)
        return sum((a * b for a, b in zip(bx, y)), QQ.zero)

    return (pair(bracket(L, u, v), w) + pair(bracket(L, v, w), u)
            + pair(bracket(L, w, u), v))


def is_cocycle(L: LieAlgebra, B: Matrix) -> bool:
    if B.shape != (L.dim, L.dim) or not B.is_skew():
        return False
    return all(not cocycle_residual(L, B, t)
               for t in combinations(range(1, L.dim + 1), 3))


def skew_pairs(n: int) -> List[Tuple[int, int]]:
    """1-based index pairs ``i < j`` ordering the coordinates of skew maps."""
    return list(combinations(range(1, n + 1), 2))


def skew_from_coordinates(coords: Sequence[Any], n: int = 4) -> Matrix:
    """``Σ b_ij f^{ij}_#`` from coordinates ordered by ``skew_pairs``."""
    result = Matrix.zeros(n, n)
    for (i, j), b in zip(skew_pairs(n), coords):
        if b:
            result = result + skew_unit(i, j, n).scale(b)
    return result


def two_cocycle_space(L: LieAlgebra) -> Subspace:
    """Kernel of the cocycle conditions, in ``f^{ij}_#`` coordinates."""
    n = L.dim
    pairs = skew_pairs(n)
    triples = list(combinations(range(1, n + 1), 3))
    columns = [[cocycle_residual(L, skew_unit(i, j, n), t) for t in triples]
               for i, j in pairs]
    if not triples:
        return Subspace.full(len(pairs))
    system = Matrix.from_columns(columns)
    return Subspace.span(kernel_basis(system), len(pairs))


def cocycle_basis(L: LieAlgebra) -> List[Matrix]:
    return [skew_from_coordinates(v, L.dim) for v in two_cocycle_space(L).basis]
