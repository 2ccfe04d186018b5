"""Four-dimensional real Lie algebras: structure constants, the catalogue
and the canonical type-1 families."""

from .algebra import (
    LieAlgebra,
    ad_matrix,
    bracket,
    coad_matrix,
    cocycle_basis,
    derived_subalgebra,
    is_automorphism,
    is_cocycle,
    is_unimodular,
    jacobi_check,
    killing_form,
    two_cocycle_space,
)
from .catalogue import (
    CatalogueKey,
    catalogue_build,
    catalogue_info,
    list_catalogue,
    sample_keys,
)
from .families import (
    NORMAL_FAMILIES,
    Prop21Params,
    normal_family,
    prop21_build,
    system_S_check,
    unimodular_criterion_eq5,
)

__all__ = [
    "CatalogueKey",
    "LieAlgebra",
    "NORMAL_FAMILIES",
    "Prop21Params",
    "ad_matrix",
    "bracket",
    "catalogue_build",
    "catalogue_info",
    "coad_matrix",
    "cocycle_basis",
    "derived_subalgebra",
    "is_automorphism",
    "is_cocycle",
    "is_unimodular",
    "jacobi_check",
    "killing_form",
    "list_catalogue",
    "normal_family",
    "prop21_build",
    "sample_keys",
    "system_S_check",
    "two_cocycle_space",
    "unimodular_criterion_eq5",
]
