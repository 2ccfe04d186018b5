"""Pure spinors of type-1 structures, their annihilators and integrability."""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from sympy.polys.domains import QQ, QQ_I

from ..core.matrix import Matrix, kernel_basis, solve
from ..core.scalars import gauss, lift
from ..core.subspace import Subspace, column_space, kernel, subspace_intersect
from ..exceptions import ConsistencyError, SpinorError
from ..exterior.forms import CForm, GenVector, ce_d, clifford_act, monomials, wedge
from ..lie.algebra import LieAlgebra, derived_subalgebra
from .courant import gen_basis
from .triple import Triple, build_K, type_of

logger = logging.getLogger(__name__)

I = gauss(0, 1)


@dataclass(frozen=True)
class SpinorData:
    """ρ = (θ + iJ*θ) + (i − λ) ω ∧ (θ + iJ*θ) and the data it was built from."""
    rho: CForm
    theta: Tuple[Any, ...]
    lam: Any
    omega: CForm
    h_basis: Tuple[Tuple[Any, ...], ...]


def pure_spinor_type1(L: LieAlgebra, t: Triple) -> SpinorData:
    """Build the pure spinor of a type-1 structure on a 4-dimensional algebra.

    ``ω`` is supported on ``𝔥 = Im R``, vanishes on ``ker σ`` and satisfies
    ``i_{Rξ} ω = −ξ`` on ``𝔥``; ``θ`` is the first RREF basis covector of ``𝔥⁰``.

    Raises:
        SpinorError: If the structure is not of type 1 on a 4-dimensional
            algebra, ``J`` is not scalar on ``Im R`` or ``𝔤 ≠ Im R ⊕ ker σ``.
    """
    n = t.n
    if n != 4 or L.dim != 4:
        raise SpinorError(f"Type-1 spinors are built in dimension 4, got {n}")
    if type_of(t) != 1:
        raise SpinorError("Structure is not of type 1")
    h = column_space(t.R)
    h1, h2 = h.basis
    Jh1, Jh2 = t.J.apply(h1), t.J.apply(h2)
    pivot = next(k for k, x in enumerate(h1) if x)
    lam = Jh1[pivot] / h1[pivot]
    if Jh1 != tuple(lam * x for x in h1) or Jh2 != tuple(lam * x for x in h2):
        raise SpinorError("J does not act as a scalar on Im R")
    complement = kernel(t.sigma)
    if complement.dim != 2 or subspace_intersect(h, complement).dim:
        raise SpinorError("𝔤 is not the direct sum of Im R and ker σ")
    frame = Matrix.from_columns([h1, h2, *complement.basis])
    dual = frame.inverse()
    if dual is None:
        raise SpinorError("Im R and ker σ do not span 𝔤")
    hd1, hd2 = dual.row(0), dual.row(1)
    scale = t.R.apply(hd1)
    denominator = sum((a * b for a, b in zip(hd2, scale)), QQ.zero)
    if not denominator:
        raise SpinorError("R is degenerate on 𝔥")
    omega = wedge(CForm.one_form(hd1), CForm.one_form(hd2)).scale(1 / denominator)
    theta = kernel_basis(t.R)[0]
    psi = CForm.one_form(theta) + CForm.one_form(t.J.transpose().apply(theta)).scale(I)
    rho = psi + wedge(omega, psi).scale(I - lift(lam))
    logger.debug(f"Spinor on {L.name or 'algebra'}: λ = {lam}, ρ = {rho}")
    return SpinorData(rho=rho, theta=tuple(theta), lam=lam, omega=omega, h_basis=(h1, h2))


def action_matrix(rho: CForm) -> Matrix:
    """The ``2ⁿ × 2n`` matrix of ``v ↦ v·ρ`` over ℚ(i)."""
    n = rho.dim
    columns = [clifford_act(v, rho).to_vector() for v in gen_basis(n)]
    return Matrix.from_columns(columns, QQ_I, nrows=len(monomials(n)))


def annihilator(rho: CForm) -> Subspace:
    """``{v ∈ (𝔤 ⊕ 𝔤*) ⊗ ℂ : v·ρ = 0}``."""
    return kernel(action_matrix(rho))


def l_subspace(t: Triple) -> Subspace:
    """``{a − iKa}``, the +i eigenspace of K."""
    K = build_K(t).K
    n2 = K.nrows
    return column_space(Matrix.identity(n2, QQ_I) - K.scale(I))


def annihilator_matches_K(L: LieAlgebra, t: Triple, rho: CForm) -> bool:
    ann = annihilator(rho)
    target = l_subspace(t)
    return ann.dim == t.n and ann.same_as(target)


def spinor_integrability(L: LieAlgebra, rho: CForm) -> Optional[GenVector]:
    """One ``X + ξ`` with ``dρ = (X + ξ)·ρ``, or ``None``.

    Solutions form a coset of ``annihilator(ρ)``.
    """
    d_rho = ce_d(L, rho)
    if d_rho.is_zero():
        return GenVector.from_tuple(tuple(QQ_I.zero for _ in range(2 * rho.dim)))
    solution = solve(action_matrix(rho), d_rho.to_vector())
    if solution is None:
        return None
    return GenVector.from_tuple(solution)


def is_admissible(L: LieAlgebra, rho: CForm, v: GenVector) -> bool:
    """Whether ``dρ = v·ρ``; agreement modulo the annihilator is automatic."""
    return ce_d(L, rho) == clifford_act(v, rho)


def is_calabi_yau(L: LieAlgebra, t: Triple) -> bool:
    """``dρ = 0``, checked against ``[𝔤, 𝔤] ⊆ Im R``.

    Raises:
        ConsistencyError: If the two criteria disagree.
    """
    spinor = pure_spinor_type1(L, t)
    closed = ce_d(L, spinor.rho).is_zero()
    contained = derived_subalgebra(L).issubspace(column_space(t.R))
    if closed != contained:
        logger.error(f"{L.name or 'algebra'}: dρ = 0 is {closed} but [𝔤,𝔤] ⊆ Im R is {contained}")
        raise ConsistencyError("Calabi–Yau criteria disagree")
    return closed
