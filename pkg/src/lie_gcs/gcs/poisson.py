"""Holomorphic Poisson structures (J, R, 0) with invertible R."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

from ..core.matrix import Matrix
from ..exceptions import ConsistencyError, DimensionError
from ..exterior.forms import CForm, ce_d
from ..lie.algebra import LieAlgebra
from .conditions import check_conditions
from .courant import nijenhuis_J
from .triple import Triple

logger = logging.getLogger(__name__)


@dataclass
class PoissonReport:
    """``valid`` is false when the input cannot define such a structure at all."""
    valid: bool
    passed: bool = False
    reason: Optional[str] = None
    criteria: Dict[str, bool] = field(default_factory=dict)


def holomorphic_poisson_check(L: LieAlgebra, J: Matrix, R: Matrix) -> PoissonReport:
    """Check ``J² = −Id``, ``N_J = 0``, ``JR = RJ*`` and ``dω = dω_J = 0`` for ``ω = R⁻¹``.

    Raises:
        DimensionError: On shape mismatches.
        ConsistencyError: If the criteria disagree with the block conditions
            on ``(J, R, 0)``.
    """
    n = L.dim
    if J.shape != (n, n) or R.shape != (n, n):
        raise DimensionError(f"J {J.shape} and R {R.shape} on a {n}-dim algebra")
    if not R.is_skew():
        return PoissonReport(valid=False, reason="R is not skew")
    omega = R.inverse()
    if omega is None:
        return PoissonReport(
            valid=False,
            reason="R must be invertible: a type-0 structure with σ = 0 needs R of full rank")
    criteria = {
        "J_squared": (J @ J + Matrix.identity(n)).is_zero(),
        "N_J": nijenhuis_J(L, J).passed,
        "JR_RJstar": (J @ R - R @ J.transpose()).is_zero(),
        "d_omega": ce_d(L, CForm.from_skew(omega)).is_zero(),
        "d_omega_J": ce_d(L, CForm.from_skew(omega @ J)).is_zero(),
    }
    report = PoissonReport(valid=True, passed=all(criteria.values()), criteria=criteria)
    if criteria["J_squared"]:
        blocks = check_conditions(L, Triple(J, R, Matrix.zeros(n, n)))
        if blocks.passed != report.passed:
            logger.error(f"{L.name or 'algebra'}: Poisson criteria {criteria}, "
                         f"block conditions {blocks.results}")
            raise ConsistencyError("Holomorphic Poisson criteria disagree with C0–C4")
    return report
