"""Generalized complex structures on Lie algebras: triples, integrability,
transformations and pure spinors."""

from .triple import (
    GenEndo,
    Triple,
    almost_check,
    bivector_sharp,
    build_K,
    canonical_type1,
    complex_triple,
    form_flat,
    sign_flip,
    symplectic_triple,
    type_of,
)
from .courant import courant_bracket, integrable_via_NK, neutral_pairing, nijenhuis_J, nijenhuis_K
from .conditions import ConditionsReport, check_conditions, is_integrable
from .transforms import apply_ops, b_transform, phi_auto, random_c0_triple, transport
from .spinor import (
    SpinorData,
    annihilator,
    annihilator_matches_K,
    is_calabi_yau,
    pure_spinor_type1,
    spinor_integrability,
)
from .poisson import PoissonReport, holomorphic_poisson_check

__all__ = [
    "ConditionsReport",
    "GenEndo",
    "PoissonReport",
    "SpinorData",
    "Triple",
    "almost_check",
    "annihilator",
    "annihilator_matches_K",
    "apply_ops",
    "b_transform",
    "bivector_sharp",
    "build_K",
    "canonical_type1",
    "check_conditions",
    "complex_triple",
    "courant_bracket",
    "form_flat",
    "holomorphic_poisson_check",
    "integrable_via_NK",
    "is_calabi_yau",
    "is_integrable",
    "neutral_pairing",
    "nijenhuis_J",
    "nijenhuis_K",
    "phi_auto",
    "pure_spinor_type1",
    "random_c0_triple",
    "sign_flip",
    "spinor_integrability",
    "symplectic_triple",
    "transport",
    "type_of",
]
