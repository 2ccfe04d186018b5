"""Tests for the U• grading and the generalized cohomology tables."""

from dataclasses import replace

import pytest
from sympy.polys.domains import QQ, QQ_I

from lie_gcs.cohomology.grading import build_grading, d_split, spinor_line
from lie_gcs.cohomology.tables import (
    _check_boundary,
    _check_euler,
    _check_symmetry,
    cohomology_table,
    compare_table,
    fixture_tables,
)
from lie_gcs.core.matrix import Matrix, skew_unit
from lie_gcs.core.scalars import gauss
from lie_gcs.core.subspace import Subspace
from lie_gcs.exceptions import ConsistencyError, DimensionError, SpinorError
from lie_gcs.exterior.forms import CForm, GenVector, ce_d, is_proportional
from lie_gcs.fixtures.loader import get_fixture
from lie_gcs.gcs.spinor import l_subspace, pure_spinor_type1
from lie_gcs.gcs.triple import Triple, symplectic_triple
from lie_gcs.lie.algebra import LieAlgebra

FLAT = (1, 4, 6, 4, 1)

# An L̄ basis in the order its products are listed for the A3,1 ⊕ A1 λ-family.
EXAMPLE_LBAR = ("I*(-lam**2 - 1)*f4 + (1 + I*lam)*v1", "I*v2 + v3",
                "(1 - I*lam)*f1 - I*v4", "f3 + I*f2")


def listed_structure(fixture_id, **values):
    bindings = {name: QQ(value) for name, value in values.items()}
    structure = get_fixture(fixture_id).typed()
    return (structure.algebra.build(bindings), structure.triple.build(bindings),
            structure.rho_form(bindings), bindings)


class TestGrading:
    """Test the levels U₋₂ … U₂."""

    def test_level_dimensions(self, abelian, type1):
        """Test dim U_k = C(4, k + 2) and that the bottom level is the spinor line."""
        grading = build_grading(abelian, type1)
        assert list(grading.degrees) == [-2, -1, 0, 1, 2]
        assert grading.dims() == FLAT
        assert sum(grading.dims()) == 16
        assert grading.generators[-2] == (pure_spinor_type1(abelian, type1).rho,)

    def test_complex_structure(self, abelian, type2):
        """Test that a type-2 structure grades through the common kernel of L."""
        rho = spinor_line(abelian, type2)
        assert is_proportional(rho, CForm.from_text("f13 - f24 - I*f14 - I*f23", 4)) is not None
        assert build_grading(abelian, type2).dims() == FLAT

    def test_rejects_foreign_spinor(self, abelian, type1):
        """Test that a form not annihilated by L is refused."""
        with pytest.raises(SpinorError):
            build_grading(abelian, type1, rho=CForm.monomial(4, [1]))

    def test_rejects_zero_spinor(self, abelian, type1):
        """Test that ρ = 0 is refused."""
        with pytest.raises(ConsistencyError):
            build_grading(abelian, type1, rho=CForm.zero(4))

    def test_odd_dimension(self):
        """Test that only even dimensions are graded."""
        L = LieAlgebra.abelian(3)
        t = Triple(Matrix.zeros(3, 3), Matrix.zeros(3, 3), Matrix.zeros(3, 3))
        with pytest.raises(DimensionError):
            build_grading(L, t)

    def test_split_vanishes_on_abelian(self, abelian, type1):
        """Test that ∂ and ∂̄ vanish when d does."""
        split = d_split(abelian, build_grading(abelian, type1))
        assert all(m is None or m.is_zero() for m in split.dell.values())
        assert all(m is None or m.is_zero() for m in split.dbar.values())

    @pytest.mark.parametrize("lam", [0, 1, QQ(-2, 3)])
    def test_split_of_listed_example(self, lam):
        """Test dU²₋₁ = (−2iλ − 2)f²³⁴ and dU⁴₀ = 4if²³ with the listed L̄."""
        L, t, rho, bindings = listed_structure("t4.A3_1xA1.lambda", lam=lam)
        lbar = [GenVector.from_text(text, 4, bindings) for text in EXAMPLE_LBAR]
        grading = build_grading(L, t, rho=rho, lbar=lbar)
        u_minus1, u_0 = grading.generators[-1], grading.generators[0]
        assert ce_d(L, u_minus1[1]) == CForm.from_text("(-2*I*lam - 2)*f234", 4, bindings)
        assert ce_d(L, u_0[3]) == CForm.from_text("4*I*f23", 4)
        assert all(ce_d(L, u_minus1[j]).is_zero() for j in (0, 2, 3))
        assert all(ce_d(L, u_0[j]).is_zero() for j in (0, 1, 2, 4, 5))
        split = d_split(L, grading)
        assert split.dbar[-1].is_zero()
        assert split.dell[-1][2, 1] == gauss(0, QQ(1, 2))

    def test_lbar_of_listed_structure(self):
        """Test that the four listed generators span L̄ for A3,4 ⊕ A1."""
        L, t, rho, _ = listed_structure("t4.A3_4xA1")
        listed = [GenVector.from_text(text, 4)
                  for text in ("-I*f2 + v1", "v3 + I*v4", "f1 - I*v2", "f4 - I*f3")]
        span = Subspace.span([v.to_tuple() for v in listed], 8, QQ_I)
        assert span.dim == 4
        assert span.same_as(l_subspace(t).conjugate())
        assert build_grading(L, t, rho=rho, lbar=listed).lbar == tuple(listed)

    def test_lbar_must_span(self, abelian, type1):
        """Test that a supplied L̄ basis is checked against conj(L)."""
        listed = [GenVector.from_text(text, 4) for text in ("v1", "v2", "v3", "v4")]
        with pytest.raises(ConsistencyError):
            build_grading(abelian, type1, lbar=listed)


class TestTables:
    """Test the dimensions of GH_∂, GH_BC and GH_A."""

    @pytest.mark.parametrize("structure", ["type1", "type2"])
    def test_abelian(self, abelian, structure, request):
        """Test that every cohomology equals its level on the abelian algebra."""
        table = cohomology_table(abelian, request.getfixturevalue(structure))
        assert table.row("del") == FLAT
        assert table.row("bc") == FLAT
        assert table.row("a") == FLAT
        assert table.d_rho_zero
        assert table.im_dbar_minus1_zero

    def test_to_json(self, abelian, type1):
        """Test the string-keyed JSON shape."""
        data = cohomology_table(abelian, type1).to_json()
        assert data["gh_del"] == {"-2": 1, "-1": 4, "0": 6, "1": 4, "2": 1}
        assert data["d_rho_zero"] is True

    def test_compare_reports_mismatches(self, abelian, type1):
        """Test that each differing degree is named with both values."""
        table = cohomology_table(abelian, type1)
        expected = table.to_json()
        assert compare_table("flat", table, expected).passed

        expected["gh_bc"] = dict(expected["gh_bc"], **{"0": 5})
        expected["d_rho_zero"] = False
        result = compare_table("flat", table, expected)
        assert not result.passed
        assert {"kind": "gh_bc", "degree": 0, "expected": 5, "computed": 6} in result.mismatches
        assert any(m["kind"] == "d_rho_zero" for m in result.mismatches)

    def test_heisenberg_symplectic(self, heisenberg):
        """Test the boundary degrees of a symplectic structure with closed spinor."""
        t = symplectic_triple(skew_unit(1, 2) + skew_unit(3, 4))
        table = cohomology_table(heisenberg, t)
        assert table.d_rho_zero == (table.gh_del[-2] == 1)
        assert table.gh_bc[-2] == table.gh_bc[2]

    def test_boundary_check_rejects_tampered_table(self, abelian, type1):
        """Test that a bottom degree disagreeing with dρ = 0 is refused."""
        table = cohomology_table(abelian, type1)
        _check_boundary(table, 2)
        tampered = replace(table, gh_del={**table.gh_del, -2: 0})
        with pytest.raises(ConsistencyError, match="Boundary degree -2"):
            _check_boundary(tampered, 2)
        tampered = replace(table, im_dbar_minus1_zero=False)
        with pytest.raises(ConsistencyError):
            _check_boundary(tampered, 2)

    def test_symmetry_check_rejects_tampered_table(self, abelian, type1):
        """Test that GH_∂ must mirror GH_∂̄."""
        table = cohomology_table(abelian, type1)
        _check_symmetry(table, 2)
        tampered = replace(table, gh_dbar={**table.gh_dbar, 1: 3})
        with pytest.raises(ConsistencyError, match="GH_∂ at -1"):
            _check_symmetry(tampered, 2)

    def test_euler_check_rejects_tampered_table(self, abelian, type1):
        """Test that the alternating sum of GH_∂ must match that of the levels."""
        grading = build_grading(abelian, type1)
        table = cohomology_table(abelian, type1)
        _check_euler(table, grading)
        tampered = replace(table, gh_del={**table.gh_del, 0: 5})
        with pytest.raises(ConsistencyError, match="Alternating sum"):
            _check_euler(tampered, grading)

    @pytest.mark.parametrize("fixture_id", ["c.A3_8xA1", "c.A3_9xA1"])
    def test_simple_factor_blocks(self, fixture_id):
        """Test the recomputed tables of sl(2) ⊕ ℝ and su(2) ⊕ ℝ."""
        comparisons = fixture_tables(get_fixture(fixture_id))
        assert len(comparisons) == 2
        for comparison in comparisons:
            assert comparison.passed
            assert comparison.deviation
            table = comparison.computed
            assert table.row("del") == (0, 1, 2, 1, 0)
            assert table.row("bc") == (0, 1, 3, 1, 0)
            assert table.row("a") == (0, 1, 3, 1, 0)
            assert sum(table.row("del")) == 4

    def test_minus_alpha_alpha_samples(self):
        """Test that both samples of A4,5^{-a,a} give the same table."""
        comparisons = fixture_tables(get_fixture("c.A4_5.minus_alpha_alpha"))
        assert len(comparisons) == 2
        for comparison in comparisons:
            assert comparison.computed.row("del") == (0, 1, 1, 1, 1)
            assert comparison.computed.row("bc") == (0, 2, 0, 2, 0)
            assert comparison.computed.row("a") == (1, 1, 2, 1, 1)
            assert [m["kind"] for m in comparison.mismatches] == ["gh_del"]
