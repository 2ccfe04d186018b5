"""Test configuration and fixtures for Lie GCS tests."""

import os
import shutil
from pathlib import Path

import pytest

from lie_gcs.config.settings import GcsSettings
from lie_gcs.fixtures.loader import clear_cache
from lie_gcs.gcs.triple import canonical_type1, complex_triple, standard_complex
from lie_gcs.lie.algebra import LieAlgebra
from lie_gcs.lie.catalogue import CatalogueKey, catalogue_build

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "lie_gcs" / "fixtures" / "data"


@pytest.fixture
def test_settings():
    """Provide small sweep sizes for fast runs."""
    return GcsSettings(
        gcs_seed=7,
        gcs_random_triples=5,
        gcs_random_params=10,
        gcs_lambda_samples="0,1",
    )


@pytest.fixture
def abelian():
    """Provide the abelian algebra 4A1."""
    return LieAlgebra.abelian(4)


@pytest.fixture
def heisenberg():
    """Provide A3,1 ⊕ A1, the only nonzero bracket being [e2, e3] = e1."""
    return catalogue_build(CatalogueKey(name="A3_1xA1"))


@pytest.fixture
def two_a2():
    """Provide 2A2 with [e1, e2] = e2 and [e3, e4] = e4."""
    return catalogue_build(CatalogueKey(name="2A2"))


@pytest.fixture
def type1():
    """Provide the canonical type-1 triple at λ = 0."""
    return canonical_type1()


@pytest.fixture
def type2():
    """Provide the complex structure E21 − E12 + E43 − E34 as a triple."""
    return complex_triple(standard_complex())


@pytest.fixture
def corpus_copy(tmp_path):
    """Provide a writable copy of the embedded fixture corpus."""
    target = tmp_path / "corpus"
    shutil.copytree(DATA_DIR, target)
    yield target
    clear_cache()


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Run each test without GCS_* overrides from the calling shell."""
    for var in [v for v in os.environ if v.upper().startswith("GCS_")]:
        monkeypatch.delenv(var)
    yield
    clear_cache()
