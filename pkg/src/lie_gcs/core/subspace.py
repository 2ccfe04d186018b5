"""Linear subspaces in canonical RREF form."""

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I

from ..exceptions import ConsistencyError, DimensionError
from .matrix import Matrix, Vector, kernel_basis, rref, solve
from .scalars import conj


@dataclass(frozen=True)
class Subspace:
    """Row span of ``basis``; the basis is the nonzero part of the RREF.

    Two subspaces over the same domain are equal iff their bases are equal.
    """
    ambient_dim: int
    basis: Tuple[Vector, ...]
    domain: Any = QQ

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Any]], ambient_dim: int,
             domain: Any = QQ) -> "Subspace":
        rows = [tuple(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionError(f"Vector of length {len(v)} in {ambient_dim}-space")
        if not rows:
            return cls(ambient_dim, (), domain)
        reduced = rref(Matrix.from_rows(rows, domain, ncols=ambient_dim))
        basis = tuple(row for row in reduced.rows if any(row))
        return cls(ambient_dim, basis, domain)

    @classmethod
    def zero(cls, ambient_dim: int, domain: Any = QQ) -> "Subspace":
        return cls(ambient_dim, (), domain)

    @classmethod
    def full(cls, ambient_dim: int, domain: Any = QQ) -> "Subspace":
        return cls.span(Matrix.identity(ambient_dim, domain).rows, ambient_dim, domain)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"Subspaces of {self.ambient_dim}- and {other.ambient_dim}-space")

    def convert_to(self, domain: Any) -> "Subspace":
        if domain == self.domain:
            return self
        return Subspace.span(self.basis, self.ambient_dim, domain)

    def _unify(self, other: "Subspace") -> Tuple["Subspace", "Subspace"]:
        self._check(other)
        if self.domain == other.domain:
            return self, other
        return self.convert_to(QQ_I), other.convert_to(QQ_I)

    def coordinates(self, v: Sequence[Any]) -> Optional[Vector]:
        """Coefficients of ``v`` in ``basis``, or ``None`` if ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise DimensionError(f"Vector of length {len(v)} in {self.ambient_dim}-space")
        if not self.basis:
            return () if not any(v) else None
        return solve(Matrix.from_columns(self.basis, self.domain), list(v))

    def contains(self, v: Sequence[Any]) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v: Sequence[Any]) -> bool:
        return self.contains(v)

    def issubspace(self, other: "Subspace") -> bool:
        a, b = self._unify(other)
        return all(b.contains(v) for v in a.basis)

    def same_as(self, other: "Subspace") -> bool:
        a, b = self._unify(other)
        return a.basis == b.basis

    def conjugate(self) -> "Subspace":
        return Subspace.span([tuple(conj(x) for x in v) for v in self.basis],
                             self.ambient_dim, self.domain)

    def image(self, m: Matrix) -> "Subspace":
        """Image of the subspace under the linear map ``m``."""
        return Subspace.span([m.apply(v) for v in self.basis], m.nrows,
                             QQ_I if QQ_I in (m.domain, self.domain) else QQ)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a, b = a._unify(b)
    return Subspace.span(list(a.basis) + list(b.basis), a.ambient_dim, a.domain)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection from the kernel of ``[Aᵀ | −Bᵀ]``."""
    a, b = a._unify(b)
    if not a.basis or not b.basis:
        return Subspace.zero(a.ambient_dim, a.domain)
    stacked = Matrix.from_columns(list(a.basis) + [tuple(-x for x in v) for v in b.basis],
                                  a.domain)
    vectors: List[Vector] = []
    for coeffs in kernel_basis(stacked):
        vec = [a.domain.zero] * a.ambient_dim
        for c, row in zip(coeffs[: a.dim], a.basis):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        vectors.append(tuple(vec))
    return Subspace.span(vectors, a.ambient_dim, a.domain)


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """``dim big − dim small`` after verifying ``small ⊆ big``.

    Raises:
        ConsistencyError: If ``small`` is not contained in ``big``.
    """
    if not small.issubspace(big):
        raise ConsistencyError(
            f"Quotient of a {big.dim}-dim space by a non-contained {small.dim}-dim space")
    return big.dim - small.dim


def kernel(m: Matrix) -> Subspace:
    return Subspace.span(kernel_basis(m), m.ncols, m.domain)


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.nrows, m.domain)
