"""Small dense matrices over ℚ and ℚ(i).

Entries are stored as sympy domain elements. Elimination, inversion,
determinants, characteristic polynomials and the ring operations are
delegated to ``DomainMatrix``.
"""

import logging
from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from ..exceptions import DimensionError
from .scalars import conj, lift, qq

logger = logging.getLogger(__name__)

Vector = Tuple[Any, ...]


def _convert(value: Any, domain: Any) -> Any:
    if domain == QQ_I:
        return lift(value)
    return qq(value)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with row-major entries."""
    rows: Tuple[Vector, ...]
    ncols: int
    domain: Any = QQ

    # ---- construction -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Any]], domain: Any = QQ,
                  ncols: Optional[int] = None) -> "Matrix":
        """Build a matrix, converting every entry into ``domain``."""
        converted = tuple(tuple(_convert(x, domain) for x in row) for row in rows)
        width = ncols if ncols is not None else (len(converted[0]) if converted else 0)
        for row in converted:
            if len(row) != width:
                raise DimensionError(f"Ragged rows: expected {width} entries, got {len(row)}")
        return cls(converted, width, domain)

    @classmethod
    def zeros(cls, nrows: int, ncols: int, domain: Any = QQ) -> "Matrix":
        return cls(tuple(tuple(domain.zero for _ in range(ncols)) for _ in range(nrows)),
                   ncols, domain)

    @classmethod
    def identity(cls, n: int, domain: Any = QQ) -> "Matrix":
        return cls(
            tuple(tuple(domain.one if i == j else domain.zero for j in range(n))
                  for i in range(n)),
            n, domain)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Any]], domain: Any = QQ,
                     nrows: Optional[int] = None) -> "Matrix":
        if not cols:
            return cls.zeros(nrows or 0, 0, domain)
        return cls.from_rows(zip(*cols), domain, ncols=len(cols))

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "Matrix":
        nrows, ncols = dm.shape
        return cls(tuple(tuple(row) for row in dm.to_list()), ncols, dm.domain)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix from a grid of compatible blocks."""
        rows: List[Vector] = []
        for block_row in blocks:
            height = block_row[0].nrows
            for block in block_row:
                if block.nrows != height:
                    raise DimensionError("Block rows have different heights")
            for i in range(height):
                rows.append(tuple(x for block in block_row for x in block.rows[i]))
        domain = QQ_I if any(b.domain == QQ_I for row in blocks for b in row) else QQ
        return cls.from_rows(rows, domain)

    # ---- shape and access --------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: Tuple[int, int]) -> Any:
        i, j = index
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows),
                      len(cols), self.domain)

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def to_list(self) -> List[List[Any]]:
        return [list(row) for row in self.rows]

    # ---- arithmetic ---------------------------------------------------

    def convert_to(self, domain: Any) -> "Matrix":
        if domain == self.domain:
            return self
        if domain == QQ:
            return Matrix.from_rows(self.rows, QQ, self.ncols)
        return Matrix(tuple(tuple(lift(x) for x in row) for row in self.rows),
                      self.ncols, QQ_I)

    def _unify(self, other: "Matrix") -> Tuple["Matrix", "Matrix"]:
        if self.domain == other.domain:
            return self, other
        return self.convert_to(QQ_I), other.convert_to(QQ_I)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape}")
        a, b = self._unify(other)
        return Matrix.from_domain_matrix(a.to_domain_matrix() + b.to_domain_matrix())

    def __neg__(self) -> "Matrix":
        return Matrix.from_domain_matrix(-self.to_domain_matrix())

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c: Any) -> "Matrix":
        """Multiply every entry by the scalar ``c``."""
        domain = QQ_I if (self.domain == QQ_I or isinstance(c, QQ_I.dtype)) else QQ
        return Matrix.from_domain_matrix(
            self.convert_to(domain).to_domain_matrix() * _convert(c, domain))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"Cannot multiply {self.shape} by {other.shape}")
        a, b = self._unify(other)
        if 0 in a.shape or 0 in b.shape:
            return Matrix.zeros(a.nrows, b.ncols, a.domain)
        return Matrix.from_domain_matrix(a.to_domain_matrix().matmul(b.to_domain_matrix()))

    def apply(self, vector: Sequence[Any]) -> Vector:
        """Matrix-vector product ``M·v``."""
        if len(vector) != self.ncols:
            raise DimensionError(f"Vector of length {len(vector)} for {self.shape} matrix")
        if any(isinstance(x, QQ_I.dtype) for x in vector) and self.domain == QQ:
            return self.convert_to(QQ_I).apply(vector)
        column = Matrix.from_columns([vector], self.domain, nrows=self.ncols)
        return (self @ column).col(0)

    def transpose(self) -> "Matrix":
        if 0 in self.shape:
            return Matrix.zeros(self.ncols, self.nrows, self.domain)
        return Matrix.from_domain_matrix(self.to_domain_matrix().transpose())

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def conjugate(self) -> "Matrix":
        return Matrix(tuple(tuple(conj(x) for x in row) for row in self.rows),
                      self.ncols, self.domain)

    def hstack(self, *others: "Matrix") -> "Matrix":
        return Matrix.block([[self, *others]])

    def vstack(self, *others: "Matrix") -> "Matrix":
        mats = [self, *others]
        domain = QQ_I if any(m.domain == QQ_I for m in mats) else QQ
        rows = [row for m in mats for row in m.convert_to(domain).rows]
        return Matrix.from_rows(rows, domain, ncols=self.ncols)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_skew(self) -> bool:
        return self.is_square and self == -self.transpose()

    def trace(self) -> Any:
        acc = self.domain.zero
        for i in range(min(self.shape)):
            acc += self.rows[i][i]
        return acc

    # ---- DomainMatrix-backed operations -------------------------------

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.rows], self.shape, self.domain)

    def inverse(self) -> Optional["Matrix"]:
        """Exact inverse, or ``None`` when singular."""
        if not self.is_square:
            raise DimensionError(f"Inverse of non-square {self.shape} matrix")
        if self.nrows == 0:
            return self
        try:
            return Matrix.from_domain_matrix(self.to_domain_matrix().inv())
        except (DMNonInvertibleMatrixError, ZeroDivisionError):
            return None

    def det(self) -> Any:
        if not self.is_square:
            raise DimensionError(f"Determinant of non-square {self.shape} matrix")
        return self.to_domain_matrix().det()

    def charpoly(self) -> List[Any]:
        """Coefficients of det(xI − M), leading coefficient first."""
        return list(self.to_domain_matrix().charpoly())

    def __pow__(self, k: int) -> "Matrix":
        result = Matrix.identity(self.nrows, self.domain)
        for _ in range(k):
            result = result @ self
        return result


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form with zero rows kept at the bottom."""
    if m.nrows == 0 or m.ncols == 0:
        return m
    reduced, _ = m.to_domain_matrix().rref()
    return Matrix.from_domain_matrix(reduced)


def pivots(m: Matrix) -> Tuple[int, ...]:
    if m.nrows == 0 or m.ncols == 0:
        return ()
    _, piv = m.to_domain_matrix().rref()
    return tuple(piv)


def rank(m: Matrix) -> int:
    return len(pivots(m))


def kernel_basis(m: Matrix) -> List[Vector]:
    """Basis of ``{x : m·x = 0}`` read off the free columns of the RREF."""
    n = m.ncols
    domain = m.domain
    if m.nrows == 0:
        return [tuple(domain.one if i == j else domain.zero for i in range(n))
                for j in range(n)]
    reduced, piv = m.to_domain_matrix().rref()
    rows = reduced.to_list()
    free = [j for j in range(n) if j not in piv]
    basis = []
    for f in free:
        vec = [domain.zero] * n
        vec[f] = domain.one
        for r, p in enumerate(piv):
            vec[p] = -rows[r][f]
        basis.append(tuple(vec))
    return basis


def solve(m: Matrix, b: Sequence[Any]) -> Optional[Vector]:
    """Return one solution of ``m·x = b`` or ``None`` when inconsistent.

    Raises:
        DimensionError: If ``b`` does not have ``m.nrows`` entries.
    """
    if len(b) != m.nrows:
        raise DimensionError(f"Right-hand side of length {len(b)} for {m.shape} system")
    domain = QQ_I if (m.domain == QQ_I or any(isinstance(x, QQ_I.dtype) for x in b)) else QQ
    n = m.ncols
    if m.nrows == 0:
        return tuple(domain.zero for _ in range(n))
    augmented = m.convert_to(domain).hstack(Matrix.from_columns([list(b)], domain))
    reduced, piv = augmented.to_domain_matrix().rref()
    if n in piv:
        return None
    rows = reduced.to_list()
    x = [domain.zero] * n
    for r, p in enumerate(piv):
        x[p] = rows[r][n]
    return tuple(x)


def E(i: int, j: int, n: int = 4) -> Matrix:
    """Matrix unit E_ij (1-based): sends e_j to e_i."""
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return Matrix.from_rows(rows)


def skew_unit(i: int, j: int, n: int = 4) -> Matrix:
    """Matrix of f_{ij}^# (and of f^{ij}_#): entry [j][i] = 1, [i][j] = −1."""
    rows = [[0] * n for _ in range(n)]
    rows[j - 1][i - 1] = 1
    rows[i - 1][j - 1] = -1
    return Matrix.from_rows(rows)
