"""Tests for the fixture corpus and the per-fixture checks."""

import json

import pytest
from pydantic import ValidationError
from sympy.polys.domains import QQ

from lie_gcs.config.settings import GcsSettings
from lie_gcs.exceptions import FixtureError, NotAutomorphismError
from lie_gcs.fixtures.loader import (
    clear_cache,
    get_fixture,
    load_corpus,
    load_kind,
    load_manifest,
    sha256_hex,
)
from lie_gcs.fixtures.models import KINDS, Fixture, OpText
from lie_gcs.suites.checks import CheckOutcome, fixture_outcomes, verify_structure


class TestCorpus:
    """Test loading and hash verification."""

    def test_loads_every_kind(self):
        """Test that every fixture kind is present and ids match the manifest."""
        corpus = load_corpus()
        kinds = {f.kind for f in corpus.values()}
        assert kinds == set(KINDS)
        manifest = load_manifest()
        assert {entry.id for entry in manifest.fixtures} == set(corpus)

    def test_manifest_hashes(self, corpus_copy):
        """Test that the recorded hashes are those of the files."""
        manifest = json.loads((corpus_copy / "manifest.json").read_text(encoding="utf-8"))
        for name, digest in manifest["files"].items():
            assert sha256_hex((corpus_copy / name).read_bytes()) == digest

    def test_hash_mismatch(self, corpus_copy):
        """Test that an edited data file is refused."""
        path = corpus_copy / "triples.json"
        path.write_text(path.read_text(encoding="utf-8") + "\n", encoding="utf-8")
        settings = GcsSettings(gcs_fixtures_dir=corpus_copy)
        with pytest.raises(FixtureError, match="hash mismatch"):
            load_corpus(settings)

    def test_missing_directory(self, tmp_path):
        """Test that a directory without a manifest is refused."""
        with pytest.raises(FixtureError):
            load_corpus(GcsSettings(gcs_fixtures_dir=tmp_path))
        clear_cache()

    def test_directory_from_environment(self, corpus_copy, monkeypatch):
        """Test that GCS_FIXTURES_DIR selects the corpus."""
        monkeypatch.setenv("GCS_FIXTURES_DIR", str(corpus_copy))
        assert get_fixture("t3.A4_3").locator == "Table 3, A4,3"

    def test_unknown_fixture(self):
        """Test that unknown ids are rejected."""
        with pytest.raises(FixtureError):
            get_fixture("t3.nothing")

    def test_unknown_kind(self):
        """Test that unknown kinds are rejected."""
        with pytest.raises(FixtureError):
            load_kind("spinor")

    def test_load_kind(self):
        """Test filtering by kind."""
        pairs = load_kind("kahler_pair")
        assert {f.typed().name for f in pairs} == {"A3_6xA1", "A2x2A1", "2A2", "A4_6"}


class TestFixtureModel:
    """Test the fixture model."""

    def test_empty_locator(self):
        """Test that every fixture must point back to its source."""
        with pytest.raises(ValidationError):
            Fixture(id="x", kind="algebra", locator="  ", payload={})

    def test_bindings_and_instance_id(self):
        """Test rational bindings and the instance naming."""
        fixture = get_fixture("t4.A3_1xA1.lambda")
        bindings = fixture.bindings()
        assert bindings[2] == {"lam": QQ(-2, 3)}
        assert fixture.instance_id(bindings[2]) == "t4.A3_1xA1.lambda[lam=-2/3]"
        assert get_fixture("t3.A4_3").instance_id({}) == "t3.A4_3"

    def test_cohomology_references_triples(self):
        """Test that every cohomology fixture names a triple fixture."""
        for fixture in load_kind("cohomology_expected"):
            assert get_fixture(fixture.typed().triple).kind == "triple"


class TestOutcomes:
    """Test per-fixture checks and their status."""

    def test_status(self):
        """Test pass, deviation and fail."""
        assert CheckOutcome("a", "a", checks={"x": True}).status == "pass"
        noted = CheckOutcome("a", "a", checks={"x": True}, note="printed typo")
        assert noted.status == "deviation"
        tolerated = CheckOutcome("a", "a", checks={"x": False}, note="typo", tolerated=("x",))
        assert tolerated.status == "deviation"
        assert CheckOutcome("a", "a", checks={"x": False}, note="typo").status == "fail"
        assert CheckOutcome("a", "a", error="boom").failures == ["error"]

    def test_listed_triple(self):
        """Test the A4,3 structure, its spinor and its admissible vector."""
        [outcome] = fixture_outcomes(get_fixture("t3.A4_3"))
        assert outcome.status == "pass"
        assert outcome.checks["spinor"]
        assert outcome.checks["admissible"]
        assert outcome.details["type"] == 1

    @pytest.mark.parametrize("fixture_id, field, printed, failing", [
        ("t3.A4_2.minus1", "rho",
         "-I*f3 + f4 + (lam - I)*f124 + (1 + I*lam)*f123", "spinor"),
        ("t3.A2x2A1.first", "admissible", "f1", "admissible"),
        ("t3.A4_5.minus1_beta", "admissible", "f4", "admissible"),
    ])
    def test_corrected_triples(self, fixture_id, field, printed, failing):
        """Test that the stored correction holds and the printed entry does not."""
        fixture = get_fixture(fixture_id)
        for outcome in fixture_outcomes(fixture):
            assert outcome.status == "deviation"
            assert not outcome.failures
        payload = dict(fixture.payload, **{field: printed})
        as_printed = fixture.model_copy(update={"payload": payload, "deviation": None})
        first = fixture_outcomes(as_printed)[0]
        assert first.status == "fail"
        assert first.failures == [failing]

    def test_algebra(self):
        """Test brackets, unimodularity and cocycles of A3,1 ⊕ A1."""
        [outcome] = fixture_outcomes(get_fixture("alg.A3_1xA1"))
        assert outcome.status == "pass"
        assert outcome.details["cocycle_dim"] == 5

    def test_transport_row(self):
        """Test a table row moving U2 onto A3,1 ⊕ A1 at both samples."""
        outcomes = fixture_outcomes(get_fixture("tr.t5.r09.U2"))
        assert len(outcomes) == 2
        for outcome in outcomes:
            assert outcome.status == "pass"
            assert outcome.checks["domain"]
            assert outcome.checks["isomorphism"]
            assert outcome.checks["target_integrable"]
            assert "expected" not in outcome.checks

    def test_transport_recomputed_passage(self):
        """Test that a row stored with a corrected passage reports a deviation."""
        outcomes = fixture_outcomes(get_fixture("tr.t6.r08.B3"))
        assert [o.status for o in outcomes] == ["deviation", "deviation"]
        assert all(not o.failures for o in outcomes)

    def test_transport_printed_passage(self):
        """Test that the printed sign on f1 breaks the isomorphism when q2 != 0."""
        fixture = get_fixture("tr.t6.r08.B3")
        payload = dict(fixture.payload, passage=["q2/q1*v3 + v4", "q1*v1", "v3", "v2"])
        printed = fixture.model_copy(update={"payload": payload, "deviation": None})
        first, second = fixture_outcomes(printed)
        assert first.status == "fail"
        assert not first.checks["isomorphism"]
        assert "target_integrable" not in first.checks
        assert second.status == "pass"

    def test_transport_outside_row(self):
        """Test that a sample violating the row's conditions fails the domain check."""
        fixture = get_fixture("tr.t5.r09.U2")
        sample = {"b1": "1", "b2": "2", "y": "1", "q1": "0", "q2": "0", "lam": "0"}
        [outcome] = fixture_outcomes(fixture.model_copy(update={"samples": [sample]}))
        assert not outcome.checks["domain"]
        assert outcome.status == "fail"

    def test_every_table_row_has_a_transport(self):
        """Test that each isomorphism table row is covered by a transport fixture."""
        locators = [f.locator for f in load_kind("transport")]
        assert sum(loc.startswith("Table 5,") for loc in locators) == 21
        assert sum(loc.startswith("Table 6,") for loc in locators) == 15
        assert sum(loc.startswith("Table 7,") for loc in locators) == 24

    def test_every_printed_identity_has_a_conjugation(self):
        """Test that each printed identity of both structure lists is recorded."""
        locators = [f.locator for f in load_kind("conjugation")]
        assert len(locators) == 57
        assert sum(loc.startswith("Section 7.1,") for loc in locators) == 20
        assert sum(loc.startswith("Section 7.2,") for loc in locators) == 37

    @pytest.mark.parametrize("fixture_id, position, printed, failing", [
        ("app.A4_12.A5", 0,
         "(lam*p - p)/2*f13 - (lam*p + p)/2*f14 + (lam*p + p)/2*f23"
         " - (lam*p - p)/2*f24 + lam/2*f34", ["cocycles", "identity"]),
        ("app.A4_6.B3.first", 1, "(2*y - 1)/y*E11 + E22 + E33 + E44", ["identity"]),
    ])
    def test_corrected_conjugations(self, fixture_id, position, printed, failing):
        """Test that the stored operations hold and the printed ones do not."""
        fixture = get_fixture(fixture_id)
        for outcome in fixture_outcomes(fixture):
            assert outcome.status == "deviation"
            assert not outcome.failures
        ops = [dict(op) for op in fixture.payload["ops"]]
        ops[position]["matrix"] = printed
        payload = dict(fixture.payload, ops=ops)
        as_printed = fixture.model_copy(update={"payload": payload, "deviation": None})
        for outcome in fixture_outcomes(as_printed):
            assert outcome.status == "fail"
            assert outcome.failures == failing
            assert "computed" in outcome.details

    def test_conjugation_by_inverse(self):
        """Test an identity whose automorphism acts by the inverse of its matrix."""
        fixture = get_fixture("app.A3_6xA1.U3.2")
        assert fixture.payload["ops"][0]["inverse"]
        for outcome in fixture_outcomes(fixture):
            assert not outcome.failures
            assert outcome.checks["automorphisms"]
            assert outcome.checks["cocycles"]
            assert outcome.checks["identity"]

    def test_conjugation_not_an_automorphism(self):
        """Test that a matrix breaking the bracket fails only where it does."""
        fixture = get_fixture("app.A4_9.minus_half")
        ops = [dict(op) for op in fixture.payload["ops"]]
        ops[0]["matrix"] = ops[0]["matrix"].replace("2*Abs(q1)/q1*E22", "2*E22")
        payload = dict(fixture.payload, ops=ops)
        as_printed = fixture.model_copy(update={"payload": payload, "deviation": None})
        first, second, third = fixture_outcomes(as_printed)
        assert first.status == "pass"
        assert second.failures == ["automorphisms", "identity"]
        assert third.status == "pass"

    def test_conjugation_outside_conditions(self):
        """Test that a sample violating an identity's conditions fails the domain check."""
        fixture = get_fixture("app.2A2.B2.special")
        sample = {"lam": "0", "q1": "1", "q2": "1"}
        [outcome] = fixture_outcomes(fixture.model_copy(update={"samples": [sample]}))
        assert not outcome.checks["domain"]
        assert outcome.status == "fail"

    def test_singular_inverse(self):
        """Test that inverting a singular printed matrix is refused."""
        op = OpText(op="phi", matrix="E11 + E22", inverse=True)
        with pytest.raises(NotAutomorphismError):
            op.resolve({})

    def test_verify_structure(self, heisenberg, type2):
        """Test that a failing structure reports the failing checks."""
        report = verify_structure(heisenberg, type2, full=True)
        assert not report.passed
        assert not report.checks["conditions"]
        assert report.checks["N_K_agrees"]
        assert report.spinor is None
