"""Tests for triples, integrability conditions and the Courant torsion."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lie_gcs.core.matrix import E, Matrix, skew_unit
from lie_gcs.exceptions import DimensionError, DomainError
from lie_gcs.exterior.forms import GenVector
from lie_gcs.gcs.conditions import check_conditions, is_integrable
from lie_gcs.gcs.courant import courant_bracket, integrable_via_NK, nijenhuis_J
from lie_gcs.gcs.poisson import holomorphic_poisson_check
from lie_gcs.gcs.transforms import random_c0_triple
from lie_gcs.gcs.triple import (
    Triple,
    almost_check,
    build_K,
    canonical_type1,
    endomorphism_from_text,
    negate,
    sign_flip,
    skew_from_text,
    standard_complex,
    symplectic_triple,
    type_of,
)
from lie_gcs.lie.algebra import basis_vector
from lie_gcs.lie.catalogue import catalogue_build, list_catalogue, sample_keys

catalogue_names = st.sampled_from(list_catalogue())


class TestTriple:
    """Test triple construction and the almost-structure checks."""

    def test_text_parsing(self):
        """Test the E and f notations."""
        assert endomorphism_from_text("E14 - E41") == E(1, 4) - E(4, 1)
        assert skew_from_text("-k*f23", bindings={"k": 2}) == skew_unit(2, 3).scale(-2)

    def test_rejects_non_skew(self):
        """Test that R and σ must be skew."""
        with pytest.raises(DomainError):
            Triple(standard_complex(), E(1, 2), Matrix.zeros(4, 4))

    def test_rejects_shape_mismatch(self):
        """Test that blocks must share their size."""
        with pytest.raises(DimensionError):
            Triple(standard_complex(), Matrix.zeros(2, 2), Matrix.zeros(4, 4))

    def test_canonical_type1_is_almost(self, type1):
        """Test K² = −Id and C0 on the canonical type-1 triple."""
        report = almost_check(type1)
        assert report.passed
        assert report.c0
        assert not report.witnesses

    @pytest.mark.parametrize("lam,a", [(0, 1), ("1/2", 3), (-2, "-1/5")])
    def test_canonical_family(self, lam, a):
        """Test that every λ and scale gives an almost structure of type 1."""
        t = canonical_type1(lam, a)
        assert almost_check(t).passed
        assert type_of(t) == 1

    def test_tampered_sigma_fails_c0(self, type1):
        """Test that dropping σ breaks C0 and produces witnesses."""
        broken = Triple(type1.J, type1.R, Matrix.zeros(4, 4))
        report = almost_check(broken)
        assert not report.passed
        assert not report.c0_square
        assert "J2_plus_Rsigma_plus_id" in report.witnesses

    def test_types(self, type1, type2):
        """Test the type of each canonical shape."""
        assert type_of(type1) == 1
        assert type_of(type2) == 2
        assert type_of(symplectic_triple(standard_complex())) == 0

    def test_symplectic_requires_nondegenerate(self):
        """Test that a degenerate 2-form is rejected."""
        with pytest.raises(DomainError):
            symplectic_triple(skew_unit(1, 2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_random_triples_are_almost(self, seed):
        """Test that random conjugates of the canonical shapes satisfy C0."""
        assert almost_check(random_c0_triple(random.Random(seed))).passed


class TestConditions:
    """Test integrability through the block conditions."""

    def test_abelian_type1(self, abelian, type1):
        """Test that the canonical type-1 triple is integrable on 4A1."""
        report = check_conditions(abelian, type1)
        assert report.passed
        assert report.failing() == []
        assert is_integrable(abelian, type1)

    def test_heisenberg_complex_fails(self, heisenberg, type2):
        """Test that the standard J is not integrable on A3,1 ⊕ A1."""
        report = check_conditions(heisenberg, type2)
        assert not report.passed
        assert "C3" in report.failing()
        pair, residual = report.witnesses["C3"]
        assert pair == (1, 3)
        assert any(residual)
        assert not nijenhuis_J(heisenberg, standard_complex()).passed
        assert not is_integrable(heisenberg, type2)

    def test_symplectic(self, heisenberg):
        """Test that a closed 2-form integrates and a non-closed one does not."""
        closed = symplectic_triple(skew_unit(1, 2) + skew_unit(3, 4))
        assert check_conditions(heisenberg, closed).passed
        open_form = symplectic_triple(skew_unit(1, 4) + skew_unit(2, 3))
        assert not check_conditions(heisenberg, open_form).passed

    def test_dimension_mismatch(self, heisenberg):
        """Test that a 2-dim triple cannot live on a 4-dim algebra."""
        t = Triple(standard_complex(2), Matrix.zeros(2, 2), Matrix.zeros(2, 2))
        with pytest.raises(DimensionError):
            check_conditions(heisenberg, t)

    def test_sign_flip_and_negation(self, abelian, type1):
        """Test that (J, −R, −σ) and −K stay integrable."""
        assert check_conditions(abelian, sign_flip(type1)).passed
        assert check_conditions(abelian, negate(type1)).passed

    @settings(max_examples=25, deadline=None)
    @given(catalogue_names, st.integers(min_value=0, max_value=10_000))
    def test_conditions_match_torsion(self, name, seed):
        """Test that C1–C4 agree with N_K = 0 on random almost structures."""
        L = catalogue_build(sample_keys(name)[0])
        t = random_c0_triple(random.Random(seed))
        assert check_conditions(L, t).passed == integrable_via_NK(L, build_K(t))


class TestCourant:
    """Test the Courant bracket on constant sections."""

    def test_vectors(self, heisenberg):
        """Test that the bracket restricts to the Lie bracket."""
        a = GenVector.vector(basis_vector(4, 2))
        b = GenVector.vector(basis_vector(4, 3))
        assert courant_bracket(heisenberg, a, b) == GenVector.vector(basis_vector(4, 1))

    def test_abelian_is_trivial(self, abelian):
        """Test that every bracket vanishes on 4A1."""
        a = GenVector.from_text("v1 + f2", 4)
        b = GenVector.from_text("v3 - f4", 4)
        assert courant_bracket(abelian, a, b).is_zero()

    def test_skew(self, heisenberg):
        """Test skew symmetry."""
        a = GenVector.from_text("v2 + f1", 4)
        b = GenVector.from_text("v3 + 2*f4", 4)
        forward = courant_bracket(heisenberg, a, b).to_tuple()
        backward = courant_bracket(heisenberg, b, a).to_tuple()
        assert all(x == -y for x, y in zip(forward, backward))


class TestPoisson:
    """Test holomorphic Poisson structures."""

    def test_degenerate_r_is_rejected(self, heisenberg):
        """Test that a rank-2 R cannot define a type-0 structure with σ = 0."""
        report = holomorphic_poisson_check(heisenberg, standard_complex(), skew_unit(1, 2))
        assert not report.valid
        assert report.reason

    def test_abelian(self, abelian):
        """Test a compatible pair on the abelian algebra."""
        J = standard_complex()
        R = skew_unit(1, 3) - skew_unit(2, 4)
        report = holomorphic_poisson_check(abelian, J, R)
        assert report.valid
        assert report.criteria["J_squared"]
        assert report.criteria["d_omega"]
        assert report.passed == report.criteria["JR_RJstar"]
