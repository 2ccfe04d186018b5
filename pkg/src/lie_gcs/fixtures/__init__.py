"""The JSON fixture corpus with its manifest of content hashes."""

from .loader import clear_cache, get_fixture, load_corpus, load_kind, load_manifest, sha256_hex
from .models import (
    KINDS,
    AlgebraRef,
    CohomologyPayload,
    ConjugationPayload,
    Fixture,
    KahlerPayload,
    Manifest,
    TransportPayload,
    TriplePayload,
    TripleText,
)

__all__ = [
    "KINDS",
    "AlgebraRef",
    "CohomologyPayload",
    "ConjugationPayload",
    "Fixture",
    "KahlerPayload",
    "Manifest",
    "TransportPayload",
    "TriplePayload",
    "TripleText",
    "clear_cache",
    "get_fixture",
    "load_corpus",
    "load_kind",
    "load_manifest",
    "sha256_hex",
]
