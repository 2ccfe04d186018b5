"""Congruence diagonalization of rational symmetric matrices."""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..exceptions import DimensionError
from .matrix import Matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    """Counts of positive, negative and zero diagonal entries."""
    positive: int
    negative: int
    zero: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    @property
    def is_positive_definite(self) -> bool:
        return self.negative == 0 and self.zero == 0


def congruence_diagonalize(
    s: Matrix,
    pivot_order: Optional[Sequence[int]] = None
) -> Tuple[Tuple[Any, ...], Matrix]:
    """Diagonalize ``s`` by congruence.

    Args:
        s: Symmetric matrix over ``QQ``
        pivot_order: Optional permutation of the indices; pivots are taken in
            this order instead of the natural one

    Returns:
        ``(diagonal, P)`` with ``Pᵀ·s·P`` equal to ``diag(diagonal)``

    Raises:
        DimensionError: If ``s`` is not square and symmetric.
    """
    if not s.is_symmetric():
        raise DimensionError("Congruence diagonalization needs a symmetric matrix")
    n = s.nrows
    order = list(pivot_order) if pivot_order is not None else list(range(n))
    if sorted(order) != list(range(n)):
        raise DimensionError(f"pivot_order {order} is not a permutation of 0..{n - 1}")

    a: List[List[Any]] = [[s[order[i], order[j]] for j in range(n)] for i in range(n)]
    p: List[List[Any]] = [[QQ.one if order[j] == i else QQ.zero for j in range(n)]
                          for i in range(n)]

    def add_multiple(target: int, source: int, c: Any) -> None:
        # column op then the matching row op keeps ``a`` symmetric
        for r in range(n):
            a[r][target] += c * a[r][source]
        for col in range(n):
            a[target][col] += c * a[source][col]
        for r in range(n):
            p[r][target] += c * p[r][source]

    def swap(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        a[i], a[j] = a[j], a[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    for k in range(n):
        if not a[k][k]:
            nonzero_diag = next((j for j in range(k + 1, n) if a[j][j]), None)
            if nonzero_diag is not None:
                swap(k, nonzero_diag)
            else:
                partner = next((j for j in range(k + 1, n) if a[k][j]), None)
                if partner is None:
                    continue
                # symmetric completion: a[k][k] becomes 2·a[k][j]
                add_multiple(k, partner, QQ.one)
        pivot = a[k][k]
        for j in range(k + 1, n):
            if a[k][j]:
                add_multiple(j, k, -a[k][j] / pivot)

    diagonal = tuple(a[i][i] for i in range(n))
    transform = Matrix.from_rows(p)
    logger.debug(f"Congruence diagonal: {diagonal}")
    return diagonal, transform


def signature(s: Matrix, pivot_order: Optional[Sequence[int]] = None) -> Signature:
    diagonal, _ = congruence_diagonalize(s, pivot_order)
    return Signature(
        positive=sum(1 for d in diagonal if d > 0),
        negative=sum(1 for d in diagonal if d < 0),
        zero=sum(1 for d in diagonal if not d),
    )


def is_positive_definite(s: Matrix) -> bool:
    return signature(s).is_positive_definite
