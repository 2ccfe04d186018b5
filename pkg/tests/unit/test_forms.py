"""Tests for complex forms, the Chevalley–Eilenberg differential and the Clifford action."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie_gcs.core.scalars import gauss
from lie_gcs.exceptions import DimensionError, DomainError
from lie_gcs.exterior.forms import (
    CForm,
    GenVector,
    ce_d,
    clifford_act,
    conj,
    contract,
    decode_form,
    encode_form,
    evaluate,
    is_proportional,
    monomials,
    sort_sign,
    wedge,
)
from lie_gcs.gcs.courant import neutral_pairing
from lie_gcs.lie.catalogue import catalogue_build, list_catalogue, sample_keys

small = st.integers(min_value=-2, max_value=2)
forms4 = st.lists(small, min_size=16, max_size=16).map(lambda v: CForm.from_vector(4, v))
gen4 = st.lists(small, min_size=8, max_size=8).map(GenVector.from_tuple)
catalogue_algebras = st.sampled_from(
    [catalogue_build(sample_keys(name)[0]) for name in list_catalogue()])


class TestForms:
    """Test form construction and the wedge product."""

    def test_sort_sign(self):
        """Test permutation signs and repeated indices."""
        assert sort_sign((2, 1)) == (-1, (1, 2))
        assert sort_sign((3, 1, 2))[0] == 1
        assert sort_sign((1, 1))[0] == 0

    def test_monomial_basis(self):
        """Test that every form lives in a 16-dimensional space on 4 generators."""
        assert len(monomials(4)) == 16

    def test_from_text(self):
        """Test parsing of Gaussian coefficients."""
        rho = CForm.from_text("f1 + I*f4 + f234 - I*f123", 4)
        assert rho[(1,)] == gauss(1, 0)
        assert rho[(4,)] == gauss(0, 1)
        assert rho[(1, 2, 3)] == gauss(0, -1)

    def test_from_text_out_of_range(self):
        """Test that indices beyond the dimension are rejected."""
        with pytest.raises((DomainError, DimensionError)):
            CForm.from_text("f15", 4)

    def test_wedge_anticommutes_on_one_forms(self):
        """Test f1 ∧ f2 = −f2 ∧ f1."""
        a, b = CForm.monomial(4, [1]), CForm.monomial(4, [2])
        assert wedge(a, b) == -wedge(b, a)
        assert wedge(a, a).is_zero()

    def test_contract(self):
        """Test the interior product on a 2-form."""
        f12 = CForm.monomial(4, [1, 2])
        assert contract((1, 0, 0, 0), f12) == CForm.monomial(4, [2])
        assert contract((0, 1, 0, 0), f12) == CForm.monomial(4, [1]).scale(-1)

    def test_evaluate(self):
        """Test evaluation of a 2-form on two vectors."""
        f12 = CForm.monomial(4, [1, 2])
        assert evaluate(f12, [(1, 0, 0, 0), (0, 1, 0, 0)]) == gauss(1, 0)

    def test_proportional(self):
        """Test detection of complex proportionality."""
        a = CForm.from_text("f1 + I*f2", 4)
        assert is_proportional(a.scale(gauss(0, 2)), a) == gauss(0, 2)
        assert is_proportional(CForm.from_text("f1 - I*f2", 4), a) is None

    def test_conj(self):
        """Test coefficient-wise conjugation."""
        assert conj(CForm.from_text("f1 + I*f2", 4)) == CForm.from_text("f1 - I*f2", 4)

    def test_encode_decode(self):
        """Test the digit-string encoding of forms."""
        rho = CForm.from_text("2 + I*f13", 4)
        data = encode_form(rho)
        assert data == {"": {"re": "2", "im": "0"}, "13": {"re": "0", "im": "1"}}
        assert decode_form(data, 4) == rho


class TestDifferential:
    """Test the Chevalley–Eilenberg differential."""

    def test_heisenberg_one_form(self, heisenberg):
        """Test d f1 = −f23 for [e2, e3] = e1."""
        assert ce_d(heisenberg, CForm.monomial(4, [1])) == CForm.monomial(4, [2, 3]).scale(-1)

    def test_abelian_is_closed(self, abelian):
        """Test that d vanishes on an abelian algebra."""
        assert ce_d(abelian, CForm.from_text("f1 + f234 + I*f13", 4)).is_zero()

    def test_dimension_mismatch(self, heisenberg):
        """Test that forms of the wrong dimension are rejected."""
        with pytest.raises(DimensionError):
            ce_d(heisenberg, CForm.monomial(3, [1]))

    @settings(max_examples=40, deadline=None)
    @given(catalogue_algebras, forms4)
    def test_d_squared_vanishes(self, L, a):
        """Test d² = 0 on every catalogue algebra."""
        assert ce_d(L, ce_d(L, a)).is_zero()

    @settings(max_examples=40, deadline=None)
    @given(catalogue_algebras, forms4, forms4)
    def test_leibniz(self, L, a, b):
        """Test d(a ∧ b) = da ∧ b ± a ∧ db on homogeneous parts."""
        for p in range(5):
            ap = a.component(p)
            expected = wedge(ce_d(L, ap), b) + wedge(ap, ce_d(L, b)).scale((-1) ** p)
            assert ce_d(L, wedge(ap, b)) == expected


class TestClifford:
    """Test the Clifford action of 𝔤 ⊕ 𝔤* on forms."""

    def test_action(self):
        """Test (X + ξ)·a = i_X a + ξ ∧ a."""
        v = GenVector.from_text("v1 + f3", 4)
        f12 = CForm.monomial(4, [1, 2])
        assert clifford_act(v, f12) == CForm.monomial(4, [2]) + CForm.monomial(4, [1, 2, 3])

    def test_generalized_vector_text(self):
        """Test parsing of generalized vectors."""
        v = GenVector.from_text("v4 + lam*f3", 4, {"lam": 2})
        assert v.X == (0, 0, 0, 1)
        assert v.xi == (0, 0, 2, 0)

    @settings(max_examples=60, deadline=None)
    @given(gen4, forms4)
    def test_clifford_relation(self, v, a):
        """Test v·(v·a) = ⟨v, v⟩ a with the neutral pairing."""
        assert clifford_act(v, clifford_act(v, a)) == a.scale(neutral_pairing(v, v))
