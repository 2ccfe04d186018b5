"""The U• grading of ∧•𝔤* ⊗ ℂ defined by a pure spinor, and the split of d.

``U₋ₙ`` is the line of ρ and ``U₋ₙ₊ₖ`` is spanned by the products
``l_{i1}·…·l_{ik}·ρ`` of ``k`` distinct elements of an L̄ basis. The
Chevalley–Eilenberg differential of an integrable structure maps ``Uₖ`` into
``Uₖ₋₁ ⊕ Uₖ₊₁``; the two components are ∂̄ and ∂.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ_I

from ..core.matrix import Matrix, kernel_basis, solve
from ..core.subspace import Subspace, subspace_sum
from ..exceptions import ConsistencyError, DimensionError, SpinorError
from ..exterior.forms import CForm, GenVector, ce_d, clifford_act, monomials
from ..gcs.spinor import action_matrix, l_subspace, pure_spinor_type1
from ..gcs.triple import Triple, type_of
from ..lie.algebra import LieAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradedDecomposition:
    """Levels ``U₋ₙ … Uₙ`` with their generating forms, keyed by degree."""
    n: int
    rho: CForm
    lbar: Tuple[GenVector, ...]
    levels: Dict[int, Subspace]
    generators: Dict[int, Tuple[CForm, ...]]

    @property
    def degrees(self) -> range:
        return range(-self.n, self.n + 1)

    def dims(self) -> Tuple[int, ...]:
        return tuple(self.levels[k].dim for k in self.degrees)

    def basis_matrix(self, k: int) -> Matrix:
        """Columns are the generator coordinates of ``U_k``."""
        forms = self.generators[k]
        return Matrix.from_columns([f.to_vector() for f in forms], QQ_I,
                                   nrows=2 ** (2 * self.n))

    def coordinates(self, k: int, form: CForm) -> Optional[Tuple[Any, ...]]:
        """Coefficients of ``form`` on the generators of ``U_k``, or ``None``."""
        if k not in self.levels:
            return None if not form.is_zero() else ()
        return solve(self.basis_matrix(k), form.to_vector())


def spinor_line(L: LieAlgebra, t: Triple) -> CForm:
    """A generator of the forms annihilated by every element of ``L``.

    Used for structures of type 0 or 2, where the type-1 formula does not apply.

    Raises:
        SpinorError: If the common kernel is not a line.
    """
    L_sub = l_subspace(t)
    n = t.n
    size = len(monomials(n))
    stacked: List[Tuple[Any, ...]] = []
    for v in L_sub.basis:
        op = _operator(GenVector.from_tuple(v), n)
        stacked.extend(op.rows)
    common = kernel_basis(Matrix.from_rows(stacked, QQ_I, ncols=size))
    if len(common) != 1:
        raise SpinorError(f"L annihilates a {len(common)}-dim space of forms, not a line")
    return CForm.from_vector(n, common[0])


def _operator(v: GenVector, n: int) -> Matrix:
    columns = [clifford_act(v, CForm.monomial(n, idx)).to_vector() for idx in monomials(n)]
    return Matrix.from_columns(columns, QQ_I, nrows=len(monomials(n)))


def _product(lbar: Sequence[GenVector], subset: Sequence[int], rho: CForm) -> CForm:
    form = rho
    for i in reversed(subset):
        form = clifford_act(lbar[i], form)
    return form


def build_grading(L: LieAlgebra, t: Triple, rho: Optional[CForm] = None,
                  lbar: Optional[Sequence[GenVector]] = None) -> GradedDecomposition:
    """Build ``U•`` from the pure spinor of ``t``.

    Args:
        L: The Lie algebra.
        t: An integrable structure on ``L``.
        rho: A pure spinor to use instead of the computed one.
        lbar: An ordered basis of L̄; the RREF basis of ``conj(L)`` by default.

    Raises:
        SpinorError: If ``rho`` is not annihilated exactly by ``L``.
        ConsistencyError: If ``lbar`` does not span L̄ or the levels fail to
            exhaust ``∧•𝔤* ⊗ ℂ``.
    """
    if L.dim % 2 or t.n != L.dim:
        raise DimensionError(f"Grading needs an even-dimensional algebra, got {L.dim}")
    n = L.dim // 2
    L_sub = l_subspace(t)
    if rho is None:
        rho = pure_spinor_type1(L, t).rho if type_of(t) == 1 else spinor_line(L, t)
    if rho.is_zero():
        raise ConsistencyError("Pure spinor is zero")
    ann = Subspace.span(kernel_basis(action_matrix(rho)), 2 * L.dim, QQ_I)
    if not ann.same_as(L_sub):
        raise SpinorError("ρ is not annihilated exactly by L")
    conj_L = L_sub.conjugate()
    if lbar is None:
        lbar = tuple(GenVector.from_tuple(v) for v in conj_L.basis)
    else:
        lbar = tuple(lbar)
        given = Subspace.span([v.to_tuple() for v in lbar], 2 * L.dim, QQ_I)
        if len(lbar) != L.dim or not given.same_as(conj_L):
            raise ConsistencyError("Supplied L̄ basis does not span the conjugate of L")
    size = 2 ** L.dim
    levels: Dict[int, Subspace] = {}
    generators: Dict[int, Tuple[CForm, ...]] = {}
    for k in range(L.dim + 1):
        forms = tuple(_product(lbar, subset, rho) for subset in combinations(range(L.dim), k))
        degree = k - n
        generators[degree] = forms
        levels[degree] = Subspace.span([f.to_vector() for f in forms], size, QQ_I)
        if levels[degree].dim != comb(L.dim, k):
            raise ConsistencyError(
                f"U_{degree} has dimension {levels[degree].dim}, expected {comb(L.dim, k)}")
    total = Subspace.zero(size, QQ_I)
    for level in levels.values():
        total = subspace_sum(total, level)
    if total.dim != size:
        raise ConsistencyError(f"Levels span {total.dim} of {size} dimensions")
    for degree in range(1, n + 1):
        if not levels[degree].same_as(levels[-degree].conjugate()):
            raise ConsistencyError(f"U_{degree} is not the conjugate of U_{-degree}")
    grading = GradedDecomposition(n, rho, lbar, levels, generators)
    logger.debug(f"{L.name or 'algebra'}: grading with dims {grading.dims()}")
    return grading


@dataclass
class DbarDelSplit:
    """Matrices of ``∂ₖ : Uₖ → Uₖ₊₁`` and ``∂̄ₖ : Uₖ → Uₖ₋₁`` on generator coordinates.

    Missing keys are the zero maps out of the top and bottom levels.
    """
    grading: GradedDecomposition
    dell: Dict[int, Matrix] = field(default_factory=dict)
    dbar: Dict[int, Matrix] = field(default_factory=dict)

    def dim(self, k: int) -> int:
        return self.grading.levels[k].dim if k in self.grading.levels else 0


def _compose_zero(a: Optional[Matrix], b: Optional[Matrix]) -> bool:
    return a is None or b is None or (a @ b).is_zero()


def d_split(L: LieAlgebra, g: GradedDecomposition) -> DbarDelSplit:
    """Decompose ``d`` on every level into its ∂ and ∂̄ components.

    Raises:
        ConsistencyError: If some ``dφ`` leaves ``Uₖ₋₁ ⊕ Uₖ₊₁`` or the
            complex laws ``∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0`` fail.
    """
    split = DbarDelSplit(g)
    for k in g.degrees:
        up = g.basis_matrix(k + 1) if k + 1 in g.levels else None
        down = g.basis_matrix(k - 1) if k - 1 in g.levels else None
        parts = [m for m in (up, down) if m is not None]
        target = parts[0].hstack(*parts[1:]) if len(parts) > 1 else parts[0]
        dell_cols: List[Tuple[Any, ...]] = []
        dbar_cols: List[Tuple[Any, ...]] = []
        for index, phi in enumerate(g.generators[k]):
            d_phi = ce_d(L, phi)
            coords = solve(target, d_phi.to_vector())
            if coords is None:
                logger.error(
                    f"d of U_{k} generator {index + 1} leaves U_{k - 1} ⊕ U_{k + 1}: {d_phi}")
                raise ConsistencyError(f"dU_{k} is not contained in U_{k - 1} ⊕ U_{k + 1}")
            width = up.ncols if up is not None else 0
            dell_cols.append(coords[:width])
            dbar_cols.append(coords[width:])
        if up is not None:
            split.dell[k] = Matrix.from_columns(dell_cols, QQ_I, nrows=up.ncols)
        if down is not None:
            split.dbar[k] = Matrix.from_columns(dbar_cols, QQ_I, nrows=down.ncols)
    for k in g.degrees:
        if not _compose_zero(split.dell.get(k + 1), split.dell.get(k)):
            raise ConsistencyError(f"∂² ≠ 0 on U_{k}")
        if not _compose_zero(split.dbar.get(k - 1), split.dbar.get(k)):
            raise ConsistencyError(f"∂̄² ≠ 0 on U_{k}")
        mixed = Matrix.zeros(split.dim(k), split.dim(k), QQ_I)
        if k - 1 in split.dell and k in split.dbar:
            mixed = mixed + split.dell[k - 1] @ split.dbar[k]
        if k + 1 in split.dbar and k in split.dell:
            mixed = mixed + split.dbar[k + 1] @ split.dell[k]
        if not mixed.is_zero():
            raise ConsistencyError(f"∂∂̄ + ∂̄∂ ≠ 0 on U_{k}")
    return split
