"""Levi-Civita connection, curvature and Ricci operator of left-invariant metrics.

Everything is computed on the basis ``e_1, …, e_n`` from the structure
constants. ``∇`` is stored as one matrix per basis vector, column ``j`` of
``nabla[i]`` being ``∇_{e_i} e_j``.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ..core.congruence import is_positive_definite
from ..core.matrix import Matrix, Vector
from ..exceptions import DimensionError, DomainError
from ..lie.algebra import LieAlgebra, basis_vector, bracket

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantMetric:
    """A symmetric positive-definite Gram matrix on the basis of 𝔤."""
    g: Matrix

    def __post_init__(self) -> None:
        if not self.g.is_symmetric():
            raise DomainError("Metric must be symmetric")
        if not is_positive_definite(self.g):
            raise DomainError("Metric must be positive definite")

    @classmethod
    def diagonal(cls, entries: Sequence[Any]) -> "InvariantMetric":
        n = len(entries)
        return cls(Matrix.from_rows([[entries[i] if i == j else 0 for j in range(n)]
                                     for i in range(n)]))

    @property
    def n(self) -> int:
        return self.g.nrows

    def __call__(self, u: Sequence[Any], v: Sequence[Any]) -> Any:
        return sum((a * b for a, b in zip(u, self.g.apply(v))), QQ.zero)


@dataclass(frozen=True)
class Connection:
    nabla: Tuple[Matrix, ...]

    def along(self, u: Sequence[Any]) -> Matrix:
        """Matrix of ``∇_u``."""
        n = len(self.nabla)
        result = Matrix.zeros(n, n)
        for i, c in enumerate(u):
            if c:
                result = result + self.nabla[i].scale(c)
        return result

    def __call__(self, u: Sequence[Any], v: Sequence[Any]) -> Vector:
        return self.along(u).apply(v)


@dataclass(frozen=True)
class CurvatureTensor:
    """``R(e_i, e_j)`` as endomorphisms, keyed by 1-based index pairs."""
    operators: Dict[Tuple[int, int], Matrix]
    n: int

    def operator(self, u: Sequence[Any], v: Sequence[Any]) -> Matrix:
        result = Matrix.zeros(self.n, self.n)
        for (i, j), Rij in self.operators.items():
            c = u[i - 1] * v[j - 1]
            if c:
                result = result + Rij.scale(c)
        return result

    def __call__(self, u: Sequence[Any], v: Sequence[Any], w: Sequence[Any]) -> Vector:
        return self.operator(u, v).apply(w)

    def is_flat(self) -> bool:
        return all(Rij.is_zero() for Rij in self.operators.values())


def _check(L: LieAlgebra, metric: InvariantMetric) -> None:
    if metric.n != L.dim:
        raise DimensionError(f"{metric.n}-dim metric on a {L.dim}-dim algebra")


def levi_civita(L: LieAlgebra, metric: InvariantMetric) -> Connection:
    """Koszul formula ``2g(∇_u v, w) = g([u,v],w) − g([v,w],u) + g([w,u],v)``.

    Raises:
        DimensionError: If the metric and the algebra have different dimensions.
    """
    _check(L, metric)
    n = L.dim
    g_inv = metric.g.inverse()
    basis = [basis_vector(n, k) for k in range(1, n + 1)]
    half = QQ(1, 2)
    nabla: List[Matrix] = []
    for u in basis:
        columns = []
        for v in basis:
            lowered = [half * (metric(bracket(L, u, v), w) - metric(bracket(L, v, w), u)
                               + metric(bracket(L, w, u), v))
                       for w in basis]
            columns.append(g_inv.apply(lowered))
        nabla.append(Matrix.from_columns(columns))
    return Connection(tuple(nabla))


def riemann(L: LieAlgebra, metric: InvariantMetric,
            connection: Optional[Connection] = None) -> CurvatureTensor:
    """``R(u, v) = [∇_u, ∇_v] − ∇_{[u,v]}``."""
    nabla = connection or levi_civita(L, metric)
    n = L.dim
    operators: Dict[Tuple[int, int], Matrix] = {}
    for i, j in product(range(1, n + 1), repeat=2):
        u, v = basis_vector(n, i), basis_vector(n, j)
        Nu, Nv = nabla.along(u), nabla.along(v)
        operators[(i, j)] = Nu @ Nv - Nv @ Nu - nabla.along(bracket(L, u, v))
    return CurvatureTensor(operators, n)


def ricci_tensor(L: LieAlgebra, metric: InvariantMetric,
                 curvature: Optional[CurvatureTensor] = None) -> Matrix:
    """``Ric(u, v) = tr(z ↦ R(z, u)v)`` on the basis."""
    R = curvature or riemann(L, metric)
    n = L.dim
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            entry = QQ.zero
            for k in range(1, n + 1):
                entry += R(basis_vector(n, k), basis_vector(n, a), basis_vector(n, b))[k - 1]
            row.append(entry)
        rows.append(row)
    return Matrix.from_rows(rows)


def ricci_operator(L: LieAlgebra, metric: InvariantMetric) -> Matrix:
    """The endomorphism ``ric`` with ``g(ric u, v) = Ric(u, v)``."""
    return metric.g.inverse() @ ricci_tensor(L, metric)


@dataclass
class ConnectionLaws:
    metric_compatible: bool
    torsion_free: bool
    bianchi: bool

    @property
    def passed(self) -> bool:
        return self.metric_compatible and self.torsion_free and self.bianchi


def connection_laws(L: LieAlgebra, metric: InvariantMetric) -> ConnectionLaws:
    """Metric compatibility, vanishing torsion and the first Bianchi identity on basis tuples."""
    nabla = levi_civita(L, metric)
    n = L.dim
    compatible = all((N.transpose() @ metric.g + metric.g @ N).is_zero() for N in nabla.nabla)
    torsion_free = True
    for i, j in product(range(1, n + 1), repeat=2):
        u, v = basis_vector(n, i), basis_vector(n, j)
        torsion = [a - b - c for a, b, c in zip(nabla(u, v), nabla(v, u), bracket(L, u, v))]
        if any(torsion):
            torsion_free = False
            logger.debug(f"Torsion at ({i}, {j}): {torsion}")
            break
    R = riemann(L, metric, nabla)
    bianchi = True
    for i, j, k in product(range(1, n + 1), repeat=3):
        u, v, w = basis_vector(n, i), basis_vector(n, j), basis_vector(n, k)
        cyclic = [a + b + c for a, b, c in zip(R(u, v, w), R(v, w, u), R(w, u, v))]
        if any(cyclic):
            bianchi = False
            logger.debug(f"First Bianchi identity fails at ({i}, {j}, {k}): {cyclic}")
            break
    return ConnectionLaws(compatible, torsion_free, bianchi)


def is_hermitian(metric: InvariantMetric, I: Matrix) -> bool:
    """``g(I·, I·) = g``."""
    return (I.transpose() @ metric.g @ I - metric.g).is_zero()


def is_einstein(L: LieAlgebra, metric: InvariantMetric) -> Optional[Any]:
    """The constant ``c`` with ``ric = c·Id``, or ``None``."""
    ric = ricci_operator(L, metric)
    c = ric[0, 0]
    if (ric - Matrix.identity(L.dim).scale(c)).is_zero():
        return c
    return None
