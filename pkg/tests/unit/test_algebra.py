"""Tests for Lie algebras, the catalogue and the canonical type-1 families."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError
from sympy.polys.domains import QQ

from lie_gcs.core.matrix import E, Matrix, skew_unit
from lie_gcs.exceptions import DimensionError, DomainError
from lie_gcs.lie.algebra import (
    LieAlgebra,
    ad_matrix,
    basis_vector,
    bracket,
    cocycle_basis,
    derived_subalgebra,
    is_automorphism,
    is_cocycle,
    is_unimodular,
    jacobi_check,
    killing_form,
    killing_restriction,
    two_cocycle_space,
)
from lie_gcs.lie.catalogue import (
    CatalogueKey,
    catalogue_build,
    catalogue_info,
    key_from_mapping,
    list_catalogue,
    sample_keys,
)
from lie_gcs.lie.families import (
    BRACKET_PARAMS,
    Prop21Params,
    a31_automorphism,
    a31_cocycle,
    eq6_matrix,
    normal_family,
    prop21_build,
    system_S_check,
    unimodular_criterion_eq5,
)

e = [None] + [basis_vector(4, k) for k in range(1, 5)]
tuples = st.fixed_dictionaries({name: st.integers(min_value=-1, max_value=1)
                                for name in BRACKET_PARAMS})


class TestLieAlgebra:
    """Test structure constants and derived data."""

    def test_bracket(self, heisenberg):
        """Test [e2, e3] = e1 and antisymmetry."""
        assert bracket(heisenberg, e[2], e[3]) == e[1]
        assert bracket(heisenberg, e[3], e[2]) == tuple(-x for x in e[1])
        assert not any(bracket(heisenberg, e[1], e[4]))

    def test_jacobi_failure(self):
        """Test that brackets violating Jacobi are rejected."""
        brackets = {(1, 2): [1, 0, 0], (1, 3): [0, 1, 0]}
        with pytest.raises(DomainError):
            LieAlgebra.from_brackets(3, brackets)
        L = LieAlgebra.from_brackets(3, brackets, unchecked=True)
        report = jacobi_check(L)
        assert not report.passed
        assert report.violations

    def test_invalid_index(self):
        """Test that [e_i, e_i] cannot be prescribed."""
        with pytest.raises(DimensionError):
            LieAlgebra.from_brackets(4, {(1, 1): [0, 0, 0, 0]})

    def test_ad_matrix(self, heisenberg):
        """Test ad(e2) = E13."""
        assert ad_matrix(heisenberg, e[2]) == E(1, 3)

    def test_unimodular(self, heisenberg, two_a2):
        """Test unimodularity by traces of ad."""
        assert is_unimodular(heisenberg)
        assert not is_unimodular(two_a2)

    def test_killing_form(self, heisenberg, two_a2):
        """Test the Killing form of a nilpotent and a solvable algebra."""
        assert killing_form(heisenberg).is_zero()
        expected = Matrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])
        assert killing_form(two_a2) == expected

    def test_derived_subalgebra(self, heisenberg, two_a2, abelian):
        """Test [𝔤, 𝔤] dimensions."""
        assert derived_subalgebra(heisenberg).dim == 1
        assert derived_subalgebra(two_a2).dim == 2
        assert derived_subalgebra(abelian).dim == 0

    def test_automorphisms(self, heisenberg):
        """Test the block form of automorphisms of A3,1 ⊕ A1."""
        A = a31_automorphism(u=2, v=1, x=1, y=3, p=1, z=-1, w=5)
        assert is_automorphism(heisenberg, A)
        scaling = E(1, 1).scale(2) + E(2, 2) + E(3, 3) + E(4, 4)
        assert not is_automorphism(heisenberg, scaling)

    def test_singular_automorphism_rejected(self):
        """Test that uv − xy = 0 is rejected."""
        with pytest.raises(DomainError):
            a31_automorphism(u=1, v=1, x=1, y=1)


class TestCocycles:
    """Test 2-cocycles."""

    @pytest.mark.parametrize("name,params,expected", [
        ("4A1", {}, 6),
        ("A3_1xA1", {}, 5),
        ("2A2", {}, 3),
        ("A4_6", {"alpha": "1", "beta": "1"}, 3),
        ("A4_6", {"alpha": "1", "beta": "0"}, 4),
    ])
    def test_cocycle_dimension(self, name, params, expected):
        """Test the dimension of the space of 2-cocycles."""
        L = catalogue_build(CatalogueKey(name=name, params=params))
        assert two_cocycle_space(L).dim == expected
        assert all(is_cocycle(L, B) for B in cocycle_basis(L))

    def test_general_cocycle(self, heisenberg):
        """Test the displayed cocycle of A3,1 ⊕ A1 and a non-closed form."""
        assert is_cocycle(heisenberg, a31_cocycle(a12=1, a13=-2, a23=3, a24=1, a34=4))
        assert not is_cocycle(heisenberg, skew_unit(1, 4))

    def test_non_skew_is_not_cocycle(self, abelian):
        """Test that only skew maps qualify."""
        assert not is_cocycle(abelian, E(1, 2))


class TestCatalogue:
    """Test the catalogue of four-dimensional algebras."""

    def test_every_sample_satisfies_jacobi(self):
        """Test that every recorded sample builds."""
        for name in list_catalogue():
            for key in sample_keys(name):
                assert jacobi_check(catalogue_build(key)).passed

    def test_unknown_name(self):
        """Test that unknown names are rejected."""
        with pytest.raises(DomainError):
            catalogue_build(CatalogueKey(name="A9_9"))

    def test_parameter_domain(self):
        """Test that parameters outside their domain are rejected."""
        with pytest.raises(DomainError):
            catalogue_build(CatalogueKey(name="A4_6", params={"alpha": "0", "beta": "1"}))

    def test_info_unimodular_placement(self):
        """Test table placement against unimodularity."""
        info = catalogue_info(CatalogueKey(name="A3_1xA1"))
        assert info.unimodular
        assert info.table == 2
        assert info.cocycle_dim == 5
        assert info.placement_consistent
        assert info.cocycle_matches

        info = catalogue_info(CatalogueKey(name="2A2"))
        assert not info.unimodular
        assert info.table == 1

    def test_unconditional_row(self):
        """Test an algebra whose single row applies for every binding."""
        info = catalogue_info(CatalogueKey(name="4A1"))
        assert info.unimodular
        assert info.cocycle_dim == 6
        assert info.placement_consistent

    def test_row_depends_on_parameters(self):
        """Test that A4,6 with α = −2β moves to the unimodular table."""
        info = catalogue_info(CatalogueKey(name="A4_6", params={"alpha": "-2", "beta": "1"}))
        assert info.unimodular
        assert info.table == 2

    def test_key_from_mapping(self):
        """Test validation of keys read from JSON."""
        key = key_from_mapping({"name": "A4_6", "params": {"alpha": "1/2", "beta": 0}})
        assert key.params == {"alpha": QQ(1, 2), "beta": QQ(0)}
        assert str(key) == "A4_6[alpha=1/2, beta=0]"
        with pytest.raises(DomainError):
            key_from_mapping({"name": "A4_6", "params": {"alpha": "x"}})


class TestCanonicalFamilies:
    """Test the bracket parameters of the canonical type-1 form."""

    def test_zero_parameters_give_abelian(self):
        """Test that all-zero parameters give the abelian algebra."""
        L, t = prop21_build(Prop21Params())
        assert not L.nonzero_brackets()
        assert system_S_check(Prop21Params()).passed
        assert t.R == skew_unit(1, 2)

    def test_parameters_are_exact_rationals(self):
        """Test that every parameter is stored as a QQ element."""
        p = Prop21Params(q1="-2/3", b1=2, lam=QQ(1, 2))
        assert all(isinstance(v, QQ.dtype) for v in p.values().values())
        assert isinstance(p.lam, QQ.dtype) and isinstance(p.a, QQ.dtype)
        assert p.q1 == QQ(-2, 3)
        assert p.b1 == QQ(2)
        assert p.a == QQ.one
        assert p.encoded()["q1"] == "-2/3"

    @pytest.mark.parametrize("value", ["sqrt(2)", "I", 0.5, True])
    def test_non_rational_parameters_rejected(self, value):
        """Test that inexact or non-real parameters fail validation."""
        with pytest.raises(ValidationError):
            Prop21Params(p1=value)

    def test_zero_scale_rejected(self):
        """Test that R = 0·e12 is rejected."""
        with pytest.raises(DomainError):
            prop21_build(Prop21Params(a=0))

    @settings(max_examples=150, deadline=None)
    @given(tuples)
    def test_system_matches_jacobi(self, values):
        """Test that the quadratic system is equivalent to Jacobi."""
        p = Prop21Params(**values)
        L, _ = prop21_build(p)
        assert system_S_check(p).passed == jacobi_check(L).passed

    @settings(max_examples=60, deadline=None)
    @given(tuples)
    def test_unimodular_criterion(self, values):
        """Test the linear unimodularity criterion against traces of ad."""
        p = Prop21Params(**values)
        L, _ = prop21_build(p)
        assert unimodular_criterion_eq5(p) == is_unimodular(L)

    @settings(max_examples=60, deadline=None)
    @given(tuples)
    def test_killing_closed_form(self, values):
        """Test the closed form of the Killing form on span(e1, e2)."""
        p = Prop21Params(**values)
        L, _ = prop21_build(p)
        assert eq6_matrix(p) == killing_restriction(L, [e[1], e[2]])

    @pytest.mark.parametrize("name,values", [
        ("U1", {"q1": 1, "q2": -2, "y": 3}),
        ("B2", {"q1": 2, "q2": 1}),
    ])
    def test_normal_family(self, name, values):
        """Test that a normal family satisfies Jacobi with its recorded unimodularity."""
        family = normal_family(name)
        p = family(lam="1/2", scale=2, **values)
        L, t = prop21_build(p)
        assert jacobi_check(L).passed
        assert is_unimodular(L) == family.unimodular
        assert t.R == skew_unit(1, 2).scale(2)

    def test_family_constraints(self):
        """Test the recorded parameter constraints."""
        with pytest.raises(DomainError):
            normal_family("U3")(b1=0, b2=0, p=2, q=0, r=0)
        with pytest.raises(DomainError):
            normal_family("B3")(q1=0, q2=0, x="1/2", y=0)
        with pytest.raises(DomainError):
            normal_family("U1")(q1=0, q2=0)
        with pytest.raises(DomainError):
            normal_family("Z9")
