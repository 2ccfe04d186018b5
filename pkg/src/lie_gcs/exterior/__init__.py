"""Complex forms on a Lie algebra, the Chevalley–Eilenberg differential and
the Clifford action of 𝔤 ⊕ 𝔤*."""

from .forms import (
    CForm,
    GenVector,
    ce_d,
    clifford_act,
    contract,
    decode_form,
    encode_form,
    is_proportional,
    monomials,
    wedge,
)

__all__ = [
    "CForm",
    "GenVector",
    "ce_d",
    "clifford_act",
    "contract",
    "decode_form",
    "encode_form",
    "is_proportional",
    "monomials",
    "wedge",
]
