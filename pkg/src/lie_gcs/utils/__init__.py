"""Serialization and formatting helpers."""

from .helpers import (
    canonical_dumps,
    encode_matrix,
    encode_triple,
    format_duration,
    max_bits,
    safe_json_serialize,
    warn_growth,
)

__all__ = [
    "canonical_dumps",
    "encode_matrix",
    "encode_triple",
    "format_duration",
    "max_bits",
    "safe_json_serialize",
    "warn_growth",
]
