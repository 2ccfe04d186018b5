"""The complexified exterior algebra of 𝔤* and the Clifford action of 𝔤⊕𝔤*.

Forms are sparse maps from strictly increasing 1-based multi-indices to
Gaussian rationals. The empty index is the constant term. Every sign comes
from the parity of the permutation that sorts a multi-index.
"""

import logging
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from sympy.polys.domains import QQ, QQ_I

from ..core.expressions import indexed_terms, linear_terms
from ..core.scalars import conj as conj_scalar
from ..core.scalars import decode_scalar, encode_scalar, lift
from ..exceptions import DimensionError, DomainError

if TYPE_CHECKING:
    from ..lie.algebra import LieAlgebra

logger = logging.getLogger(__name__)

Index = Tuple[int, ...]


def sort_sign(indices: Sequence[int]) -> Tuple[int, Index]:
    """Sign of the sorting permutation and the sorted index, or ``(0, ())`` on repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


def monomials(n: int) -> List[Index]:
    """All increasing multi-indices over ``1..n``, by degree then lexicographically."""
    return [idx for k in range(n + 1) for idx in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class CForm:
    """An inhomogeneous complex form on an ``n``-dimensional Lie algebra."""
    dim: int
    coeffs: Mapping[Index, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Dict[Index, Any] = {}
        for idx, c in self.coeffs.items():
            idx = tuple(idx)
            if any(not 1 <= i <= self.dim for i in idx) or list(idx) != sorted(set(idx)):
                raise DimensionError(f"Multi-index {idx} is not increasing in 1..{self.dim}")
            c = lift(c)
            if c:
                clean[idx] = c
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def zero(cls, n: int) -> "CForm":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "CForm":
        return cls(n, {(): QQ_I.one})

    @classmethod
    def monomial(cls, n: int, indices: Sequence[int], coeff: Any = 1) -> "CForm":
        """``coeff · f^{i1} ∧ … ∧ f^{ik}`` for any ordering of the indices."""
        sign, idx = sort_sign(indices)
        if not sign:
            return cls.zero(n)
        return cls(n, {idx: lift(coeff) * sign})

    @classmethod
    def one_form(cls, covector: Sequence[Any]) -> "CForm":
        return cls(len(covector), {(k + 1,): c for k, c in enumerate(covector) if c})

    @classmethod
    def from_text(cls, text: str, n: int, bindings: Optional[Mapping[str, Any]] = None) -> "CForm":
        """Parse strings like ``"f2 + I*f3 - (1 + I*lam)*f134"``.

        Raises:
            DomainError: On non-linear terms or indices outside ``1..n``.
        """
        result = cls.zero(n)
        for idx, c in indexed_terms(text, "f", 0, n, bindings or {}).items():
            result = result + cls.monomial(n, idx, c)
        return result

    @classmethod
    def from_vector(cls, n: int, vector: Sequence[Any]) -> "CForm":
        basis = monomials(n)
        if len(vector) != len(basis):
            raise DimensionError(f"Expected {len(basis)} coordinates, got {len(vector)}")
        return cls(n, {idx: c for idx, c in zip(basis, vector) if c})

    @classmethod
    def from_skew(cls, M: Any) -> "CForm":
        """The 2-form ``σ^b(u, v) = ⟨σu, v⟩`` of a map 𝔤 → 𝔤*, i.e. ``Σ_{i<j} M[j][i] f^{ij}``."""
        n = M.nrows
        return cls(n, {(i + 1, j + 1): M[j, i] for i, j in combinations(range(n), 2) if M[j, i]})

    # ---- access -------------------------------------------------------

    def __getitem__(self, idx: Index) -> Any:
        return self.coeffs.get(tuple(idx), QQ_I.zero)

    def __iter__(self) -> Iterator[Tuple[Index, Any]]:
        return iter(sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0])))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return not self.is_zero()

    def degrees(self) -> List[int]:
        return sorted({len(idx) for idx in self.coeffs})

    def component(self, k: int) -> "CForm":
        """Homogeneous degree-``k`` part."""
        return CForm(self.dim, {idx: c for idx, c in self.coeffs.items() if len(idx) == k})

    def to_vector(self) -> Tuple[Any, ...]:
        """Coordinates over ``monomials(dim)``."""
        return tuple(self[idx] for idx in monomials(self.dim))

    # ---- linear structure ---------------------------------------------

    def _check(self, other: "CForm") -> None:
        if self.dim != other.dim:
            raise DimensionError(f"Forms on {self.dim}- and {other.dim}-dim algebras")

    def __add__(self, other: "CForm") -> "CForm":
        self._check(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out.get(idx, QQ_I.zero) + c
        return CForm(self.dim, out)

    def __neg__(self) -> "CForm":
        return CForm(self.dim, {idx: -c for idx, c in self.coeffs.items()})

    def __sub__(self, other: "CForm") -> "CForm":
        return self + (-other)

    def scale(self, c: Any) -> "CForm":
        c = lift(c)
        return CForm(self.dim, {idx: c * x for idx, x in self.coeffs.items()})

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for idx, c in self:
            name = "f" + "".join(str(i) for i in idx) if idx else "1"
            parts.append(f"({c})*{name}" if idx else f"({c})")
        return " + ".join(parts)


@dataclass(frozen=True)
class GenVector:
    """An element ``X + ξ`` of (𝔤 ⊕ 𝔤*) ⊗ ℂ."""
    X: Tuple[Any, ...]
    xi: Tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.X) != len(self.xi):
            raise DimensionError(f"Vector part of length {len(self.X)}, covector {len(self.xi)}")
        object.__setattr__(self, "X", tuple(self.X))
        object.__setattr__(self, "xi", tuple(self.xi))

    @property
    def dim(self) -> int:
        return len(self.X)

    @classmethod
    def from_tuple(cls, values: Sequence[Any]) -> "GenVector":
        """Split a ``2n`` coordinate tuple into vector and covector halves."""
        if len(values) % 2:
            raise DimensionError(f"Odd length {len(values)} for an element of 𝔤 ⊕ 𝔤*")
        n = len(values) // 2
        return cls(tuple(values[:n]), tuple(values[n:]))

    @classmethod
    def vector(cls, X: Sequence[Any]) -> "GenVector":
        return cls(tuple(X), tuple(QQ.zero for _ in X))

    @classmethod
    def covector(cls, xi: Sequence[Any]) -> "GenVector":
        return cls(tuple(QQ.zero for _ in xi), tuple(xi))

    @classmethod
    def from_text(cls, text: str, n: int,
                  bindings: Optional[Mapping[str, Any]] = None) -> "GenVector":
        """Parse input such as ``"v4 + lam*f3"`` (here ``f_4 + λf^3``).

        Vector components use the prefix ``v`` and covector components ``f``.

        Raises:
            DomainError: On unknown symbols or non-linear terms.
        """
        names = sorted(set(re.findall(r"\b[vf][1-9]\b", text)))
        X = [QQ.zero] * n
        xi = [QQ.zero] * n
        for name, c in linear_terms(text, names, bindings or {}).items():
            if not name:
                raise DomainError(f"Constant term in generalized vector '{text}'")
            k = int(name[1:])
            if k > n:
                raise DomainError(f"Index {k} outside 1..{n} in '{text}'")
            (X if name[0] == "v" else xi)[k - 1] = c
        return cls(tuple(X), tuple(xi))

    def to_tuple(self) -> Tuple[Any, ...]:
        return self.X + self.xi

    def is_zero(self) -> bool:
        return not any(self.to_tuple())


def wedge(a: CForm, b: CForm) -> CForm:
    """Exterior product with Koszul signs from sorting concatenated indices."""
    a._check(b)
    out: Dict[Index, Any] = {}
    for ia, ca in a.coeffs.items():
        for ib, cb in b.coeffs.items():
            sign, idx = sort_sign(ia + ib)
            if sign:
                out[idx] = out.get(idx, QQ_I.zero) + ca * cb * sign
    return CForm(a.dim, out)


def wedge_all(forms: Iterable[CForm], n: int) -> CForm:
    result = CForm.one(n)
    for form in forms:
        result = wedge(result, form)
    return result


def contract(X: Sequence[Any], a: CForm) -> CForm:
    """Interior product ``i_X a``, an anti-derivation of degree −1."""
    if len(X) != a.dim:
        raise DimensionError(f"Vector of length {len(X)} on {a.dim}-dim forms")
    out: Dict[Index, Any] = {}
    for idx, c in a.coeffs.items():
        for p, i in enumerate(idx):
            x = X[i - 1]
            if not x:
                continue
            rest = idx[:p] + idx[p + 1:]
            term = c * lift(x)
            out[rest] = out.get(rest, QQ_I.zero) + (term if p % 2 == 0 else -term)
    return CForm(a.dim, out)


def _d_one_form(L: "LieAlgebra", k: int) -> CForm:
    """``df^k = −Σ_{i<j} c_ij^k f^{ij}``."""
    n = L.dim
    return CForm(n, {(i + 1, j + 1): -L.c[i][j][k - 1]
                     for i, j in combinations(range(n), 2) if L.c[i][j][k - 1]})


def ce_d(L: "LieAlgebra", a: CForm) -> CForm:
    """Chevalley–Eilenberg differential, extended as an anti-derivation."""
    if L.dim != a.dim:
        raise DimensionError(f"{a.dim}-dim form on a {L.dim}-dim algebra")
    n = L.dim
    d1 = {k: _d_one_form(L, k) for k in range(1, n + 1)}
    result = CForm.zero(n)
    for idx, c in a.coeffs.items():
        for p, i in enumerate(idx):
            if d1[i].is_zero():
                continue
            before = CForm.monomial(n, idx[:p])
            after = CForm.monomial(n, idx[p + 1:])
            term = wedge(wedge(before, d1[i]), after).scale(c)
            result = result + (term if p % 2 == 0 else -term)
    return result


def clifford_act(v: GenVector, a: CForm) -> CForm:
    """``(X + ξ)·a = i_X a + ξ ∧ a``."""
    if v.dim != a.dim:
        raise DimensionError(f"{v.dim}-dim generalized vector on {a.dim}-dim forms")
    return contract(v.X, a) + wedge(CForm.one_form(v.xi), a)


def conj(a: CForm) -> CForm:
    return CForm(a.dim, {idx: conj_scalar(c) for idx, c in a.coeffs.items()})


def evaluate(a: CForm, vectors: Sequence[Sequence[Any]]) -> Any:
    """``a(u1, …, uk) = i_{uk} ⋯ i_{u1} a`` read off in degree 0."""
    form = a.component(len(vectors))
    for u in vectors:
        form = contract(u, form)
    return form[()]


def is_proportional(a: CForm, b: CForm) -> Optional[Any]:
    """The scalar ``c`` with ``a = c·b``, or ``None``; both must be nonzero."""
    a._check(b)
    if a.is_zero() or b.is_zero() or set(a.coeffs) != set(b.coeffs):
        return None
    idx = next(iter(b.coeffs))
    c = a.coeffs[idx] / b.coeffs[idx]
    return c if b.scale(c) == a else None


def encode_form(a: CForm) -> Dict[str, Any]:
    """``{"134": scalar}`` with ``""`` for the constant term."""
    return {"".join(str(i) for i in idx): encode_scalar(c) for idx, c in a}


def decode_form(data: Mapping[str, Any], n: int) -> CForm:
    """Inverse of ``encode_form``.

    Raises:
        DomainError: On malformed index keys.
    """
    coeffs: Dict[Index, Any] = {}
    for key, value in data.items():
        if key and not key.isdigit():
            raise DomainError(f"Form key '{key}' is not a digit string")
        sign, idx = sort_sign([int(ch) for ch in key])
        if not sign and key:
            raise DomainError(f"Form key '{key}' repeats an index")
        coeffs[idx] = lift(decode_scalar(value)) * (sign or 1)
    return CForm(n, coeffs)
