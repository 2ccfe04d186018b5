"""Helper utilities for the Lie GCS engine."""

import dataclasses
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List

from sympy.polys.domains import QQ, QQ_I

from ..core.matrix import Matrix
from ..core.scalars import bit_length, encode_scalar
from ..core.subspace import Subspace
from ..exterior.forms import CForm, GenVector, encode_form
from ..gcs.triple import GenEndo, Triple

logger = logging.getLogger(__name__)


def format_duration(seconds: float) -> str:
    """Render a wall-clock interval for run reports, e.g. ``"850.0ms"`` or ``"1m 30.0s"``."""
    if seconds < 1:
        return f"{seconds * 1000:.1f}ms"
    minutes, secs = divmod(seconds, 60)
    if not minutes:
        return f"{secs:.1f}s"
    hours, minutes = divmod(int(minutes), 60)
    if not hours:
        return f"{minutes}m {secs:.1f}s"
    return f"{hours}h {minutes}m"


def encode_matrix(m: Matrix) -> List[List[Any]]:
    """Rows of scalar encodings: ``"p/q"`` or ``{"re", "im"}``."""
    return [[encode_scalar(x) for x in row] for row in m.to_list()]


def encode_triple(t: Triple) -> Dict[str, Any]:
    return {"J": encode_matrix(t.J), "R": encode_matrix(t.R), "sigma": encode_matrix(t.sigma)}


def _is_scalar(obj: Any) -> bool:
    return isinstance(obj, (QQ.dtype, QQ_I.dtype)) and not isinstance(obj, (bool, int))


def safe_json_serialize(obj: Any) -> Any:
    """Serialize engine objects to a JSON-compatible structure.

    Scalars use their exact encodings, matrices become rows, forms become
    ``{"134": scalar}`` maps and dataclasses become dicts of their fields.

    Args:
        obj: Object to serialize

    Returns:
        JSON-compatible object
    """
    if obj is None:
        return None
    elif isinstance(obj, Enum):
        return obj.value
    elif isinstance(obj, (bool, int, float, str)):
        return obj
    elif _is_scalar(obj):
        return encode_scalar(obj)
    elif isinstance(obj, Matrix):
        return encode_matrix(obj)
    elif isinstance(obj, Triple):
        return encode_triple(obj)
    elif isinstance(obj, GenEndo):
        return encode_matrix(obj.K)
    elif isinstance(obj, CForm):
        return encode_form(obj)
    elif isinstance(obj, GenVector):
        return [encode_scalar(x) for x in obj.to_tuple()]
    elif isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [safe_json_serialize(v) for v in obj.basis]}
    elif isinstance(obj, Path):
        return str(obj)
    elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: safe_json_serialize(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    elif hasattr(obj, "model_dump"):
        return safe_json_serialize(obj.model_dump())
    elif isinstance(obj, (list, tuple)):
        return [safe_json_serialize(item) for item in obj]
    elif isinstance(obj, dict):
        return {_key(k): safe_json_serialize(v) for k, v in obj.items()}
    elif isinstance(obj, (set, frozenset)):
        return sorted(safe_json_serialize(item) for item in obj)
    else:
        return str(obj)


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(part) for part in k)
    return str(k)


def canonical_dumps(obj: Any) -> str:
    """Byte-stable JSON: sorted keys, fixed separators, no trailing spaces."""
    return json.dumps(safe_json_serialize(obj), sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False)


def max_bits(m: Matrix) -> int:
    """Largest numerator or denominator bit length among the entries of ``m``."""
    return max((bit_length(x) for row in m.to_list() for x in row), default=0)


def warn_growth(label: str, m: Matrix, limit: int) -> None:
    """Log entries whose size exceeds ``limit`` bits; nothing is truncated."""
    bits = max_bits(m)
    if bits > limit:
        logger.warning(f"{label}: entries reach {bits} bits (limit {limit})")
