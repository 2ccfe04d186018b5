"""Generalized Kähler pairs and the bihermitian metrics they induce."""

from .pairs import (
    KahlerPair,
    PairVerification,
    Prop41Report,
    classical_kahler_pair,
    eq13_check,
    eq13_expression,
    is_positive,
    metric_G,
    prop41_constraints,
    verify_pair,
)
from .riemann import InvariantMetric, connection_laws, levi_civita, ricci_operator, riemann
from .structures import (
    BihermitianReport,
    ScanReport,
    bihermitian_check,
    theorem32_structures,
    theorem41_fixture,
    theorem42_scan,
)

__all__ = [
    "BihermitianReport",
    "InvariantMetric",
    "KahlerPair",
    "PairVerification",
    "Prop41Report",
    "ScanReport",
    "bihermitian_check",
    "classical_kahler_pair",
    "connection_laws",
    "eq13_check",
    "eq13_expression",
    "is_positive",
    "levi_civita",
    "metric_G",
    "prop41_constraints",
    "ricci_operator",
    "riemann",
    "theorem32_structures",
    "theorem41_fixture",
    "theorem42_scan",
    "verify_pair",
]
