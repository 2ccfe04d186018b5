"""Integrability of a triple (J, R, σ) through the five block conditions.

C0 is algebraic. C1 says R is Poisson, C2 that J* is compatible with the
bracket ``[α, β]_R``, C3 relates the torsion of J to ``dσ^b`` through R, and
C4 is the closedness condition linking ``σ_J`` to ``dσ^b``. Together they are
equivalent to the vanishing of the Nijenhuis torsion of K.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Sequence, Tuple

from ..core.matrix import Matrix, Vector
from ..exceptions import ConsistencyError, DimensionError
from ..exterior.forms import CForm, ce_d, contract, evaluate
from ..lie.algebra import LieAlgebra, basis_vector, bracket, coad_matrix
from .courant import combine, integrable_via_NK, nijenhuis_J_pair
from .triple import Triple, almost_check, build_K

logger = logging.getLogger(__name__)

CONDITIONS = ("C0", "C1", "C2", "C3", "C4")


@dataclass
class ConditionsReport:
    """Per-condition outcome with the first failing basis tuple and residual."""
    results: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Tuple[Tuple[int, ...], Any]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.results.get(name, False) for name in CONDITIONS)

    def failing(self) -> List[str]:
        return [name for name in CONDITIONS if not self.results.get(name, False)]


def r_bracket(L: LieAlgebra, R: Matrix, alpha: Sequence[Any], beta: Sequence[Any]) -> Vector:
    """``[α, β]_R = ad^t_{Rα} β − ad^t_{Rβ} α``."""
    return combine((1, coad_matrix(L, R.apply(alpha)).apply(beta)),
                   (-1, coad_matrix(L, R.apply(beta)).apply(alpha)))


def poisson_residual(L: LieAlgebra, R: Matrix, alpha: Sequence[Any],
                     beta: Sequence[Any]) -> Vector:
    """``[Rα, Rβ] − R[α, β]_R``; its ``f^k`` components are those of ``[R, R]``."""
    return combine((1, bracket(L, R.apply(alpha), R.apply(beta))),
                   (-1, R.apply(r_bracket(L, R, alpha, beta))))


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _c1(L: LieAlgebra, t: Triple) -> Tuple[bool, Any]:
    n = L.dim
    for i, j in _pairs(n):
        residual = poisson_residual(L, t.R, basis_vector(n, i), basis_vector(n, j))
        if any(residual):
            return False, ((i, j), residual)
    return True, None


def _c2(L: LieAlgebra, t: Triple) -> Tuple[bool, Any]:
    n = L.dim
    Js = t.J_star
    for i, j in _pairs(n):
        alpha, beta = basis_vector(n, i), basis_vector(n, j)
        lhs = Js.apply(r_bracket(L, t.R, alpha, beta))
        rhs = combine((1, coad_matrix(L, t.R.apply(alpha)).apply(Js.apply(beta))),
                      (-1, coad_matrix(L, t.R.apply(beta)).apply(Js.apply(alpha))))
        residual = combine((1, lhs), (-1, rhs))
        if any(residual):
            return False, ((i, j), residual)
    return True, None


def _covector(a: CForm) -> Vector:
    return tuple(a[(k,)] for k in range(1, a.dim + 1))


def _c3(L: LieAlgebra, t: Triple, d_sigma: CForm) -> Tuple[bool, Any]:
    n = L.dim
    for i, j in _pairs(n):
        u, v = basis_vector(n, i), basis_vector(n, j)
        inner = contract(v, contract(u, d_sigma))
        residual = combine((1, nijenhuis_J_pair(L, t.J, u, v)),
                           (-1, t.R.apply(_covector(inner))))
        if any(residual):
            return False, ((i, j), residual)
    return True, None


def _c4(L: LieAlgebra, t: Triple, d_sigma: CForm) -> Tuple[bool, Any]:
    n = L.dim
    d_sigma_J = ce_d(L, CForm.from_skew(t.sigma @ t.J))
    for i, j, k in combinations(range(1, n + 1), 3):
        u, v, w = basis_vector(n, i), basis_vector(n, j), basis_vector(n, k)
        Ju, Jv, Jw = t.J.apply(u), t.J.apply(v), t.J.apply(w)
        insertions = (evaluate(d_sigma, [Ju, v, w]) + evaluate(d_sigma, [u, Jv, w])
                      + evaluate(d_sigma, [u, v, Jw]))
        residual = evaluate(d_sigma_J, [u, v, w]) - insertions
        if residual:
            return False, ((i, j, k), residual)
    return True, None


def check_conditions(L: LieAlgebra, t: Triple) -> ConditionsReport:
    """Evaluate C0–C4 on basis vectors and covectors.

    Raises:
        DimensionError: If the triple and the algebra have different dimensions.
    """
    if t.n != L.dim:
        raise DimensionError(f"{t.n}-dim triple on a {L.dim}-dim algebra")
    report = ConditionsReport()
    almost = almost_check(t)
    report.results["C0"] = almost.c0
    if not almost.c0:
        report.witnesses["C0"] = ((), almost.witnesses.get("J2_plus_Rsigma_plus_id"))
    d_sigma = ce_d(L, CForm.from_skew(t.sigma))
    for name, outcome in (("C1", _c1(L, t)), ("C2", _c2(L, t)),
                          ("C3", _c3(L, t, d_sigma)), ("C4", _c4(L, t, d_sigma))):
        ok, witness = outcome
        report.results[name] = ok
        if not ok:
            report.witnesses[name] = witness
    if not report.passed:
        logger.debug(f"{L.name or 'algebra'}: failing conditions {report.failing()}")
    return report


def is_integrable(L: LieAlgebra, t: Triple) -> bool:
    """Integrability decided by C0–C4 and cross-checked against N_K.

    Raises:
        ConsistencyError: If the two criteria disagree on an almost structure.
    """
    report = check_conditions(L, t)
    if not report.results["C0"]:
        return False
    via_torsion = integrable_via_NK(L, build_K(t))
    if via_torsion != report.passed:
        logger.error(f"{L.name or 'algebra'}: conditions {report.results} "
                     f"but N_K says {via_torsion}")
        raise ConsistencyError(
            f"Block conditions ({report.passed}) and Nijenhuis torsion ({via_torsion}) disagree")
    return via_torsion
