"""Tests for pure spinors of type-1 structures."""

import pytest

from lie_gcs.core.scalars import gauss
from lie_gcs.exceptions import SpinorError
from lie_gcs.exterior.forms import CForm, GenVector, ce_d, is_proportional
from lie_gcs.gcs.spinor import (
    annihilator,
    annihilator_matches_K,
    is_admissible,
    is_calabi_yau,
    l_subspace,
    pure_spinor_type1,
    spinor_integrability,
)
from lie_gcs.gcs.triple import Triple, endomorphism_from_text, skew_from_text
from lie_gcs.lie.catalogue import CatalogueKey, catalogue_build


@pytest.fixture
def a43():
    """Provide A4,3 with its listed type-1 structure."""
    L = catalogue_build(CatalogueKey(name="A4_3"))
    t = Triple(endomorphism_from_text("E14 - E41"), skew_from_text("-f23"),
               skew_from_text("-f23"))
    return L, t


class TestPureSpinor:
    """Test the type-1 spinor formula."""

    def test_abelian(self, abelian, type1):
        """Test ρ = ψ + i ω ∧ ψ with ψ = f3 + i f4 and ω = f12."""
        data = pure_spinor_type1(abelian, type1)
        assert data.lam == 0
        assert data.omega == CForm.monomial(4, [1, 2])
        assert data.rho == CForm.from_text("f3 + I*f4 + I*f123 - f124", 4)
        assert annihilator_matches_K(abelian, type1, data.rho)

    def test_listed_spinor(self, a43):
        """Test that the formula reproduces the listed spinor of A4,3."""
        L, t = a43
        rho = pure_spinor_type1(L, t).rho
        assert rho == CForm.from_text("f1 + I*f4 + f234 - I*f123", 4)
        assert annihilator_matches_K(L, t, rho)

    def test_scaled_spinor_has_same_annihilator(self, abelian, type1):
        """Test that the annihilator only sees the line of ρ."""
        rho = pure_spinor_type1(abelian, type1).rho
        scaled = rho.scale(gauss(2, -3))
        assert is_proportional(scaled, rho) == gauss(2, -3)
        assert annihilator(scaled).same_as(l_subspace(type1))

    def test_rejects_other_types(self, abelian, type2):
        """Test that a complex structure has no type-1 spinor."""
        with pytest.raises(SpinorError):
            pure_spinor_type1(abelian, type2)

    def test_wrong_form_is_not_annihilated(self, abelian, type1):
        """Test that a generic 1-form is not the spinor of the structure."""
        assert not annihilator_matches_K(abelian, type1, CForm.monomial(4, [1]))


class TestSpinorIntegrability:
    """Test dρ = (X + ξ)·ρ and the Calabi–Yau condition."""

    def test_closed_spinor(self, abelian, type1):
        """Test that a closed spinor is solved by the zero vector."""
        rho = pure_spinor_type1(abelian, type1).rho
        v = spinor_integrability(abelian, rho)
        assert v is not None and v.is_zero()
        assert is_calabi_yau(abelian, type1)

    def test_admissible_vector(self, a43):
        """Test that f4 is admissible for A4,3 and that ρ is not closed."""
        L, t = a43
        rho = pure_spinor_type1(L, t).rho
        assert not ce_d(L, rho).is_zero()
        assert is_admissible(L, rho, GenVector.from_text("f4", 4))
        assert not is_admissible(L, rho, GenVector.from_text("f3", 4))
        found = spinor_integrability(L, rho)
        assert found is not None
        assert is_admissible(L, rho, found)
        assert not is_calabi_yau(L, t)
