"""The catalogue of four-dimensional real Lie algebras.

Brackets, parameter domains, existence flags and 2-cocycle counts ship as
``data/catalogue.json``. Coefficients are expressions in the declared
parameter names and are only evaluated once every parameter is bound.
"""

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..core.expressions import evaluate, evaluate_predicate
from ..core.scalars import decode_rational, encode_rational
from ..exceptions import DomainError, FixtureError
from .algebra import LieAlgebra, is_unimodular, two_cocycle_space

logger = logging.getLogger(__name__)


class BracketSpec(BaseModel):
    i: int
    j: int
    coeffs: List[str]


class TableRow(BaseModel):
    when: str = "True"
    table: int
    types: Dict[str, bool]
    locator: str
    table8_dim: int
    table8_deviation: Optional[Dict[str, Any]] = None


class Rejection(BaseModel):
    when: str
    reason: str


class CatalogueEntry(BaseModel):
    """One algebra (or parametric family) of the catalogue."""
    name: str
    label: str
    params: List[str] = Field(default_factory=list)
    domain: List[str] = Field(default_factory=list)
    rejected: List[Rejection] = Field(default_factory=list)
    brackets: List[BracketSpec] = Field(default_factory=list)
    samples: List[Dict[str, str]] = Field(default_factory=lambda: [{}])
    rows: List[TableRow]


class CatalogueKey(BaseModel):
    """A catalogue name with its parameter bindings."""
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("params", mode="before")
    @classmethod
    def parse_params(cls, v):
        """Bind every parameter to an exact rational."""
        if v is None:
            return {}
        try:
            return {str(k): decode_rational(value) for k, value in dict(v).items()}
        except DomainError as e:
            raise ValueError(str(e))

    def encoded(self) -> Dict[str, Any]:
        return {"name": self.name,
                "params": {k: encode_rational(v) for k, v in sorted(self.params.items())}}

    def __str__(self) -> str:
        if not self.params:
            return self.name
        bound = ", ".join(f"{k}={encode_rational(v)}" for k, v in sorted(self.params.items()))
        return f"{self.name}[{bound}]"


@dataclass
class CatalogueInfo:
    """Everything ``catalogue show`` prints for one key."""
    key: CatalogueKey
    label: str
    brackets: Dict[Tuple[int, int], Tuple[Any, ...]]
    unimodular: bool
    table: int
    types: Dict[str, bool]
    locator: str
    cocycle_dim: int
    table8_dim: int
    table8_deviation: Optional[Dict[str, Any]] = None

    @property
    def placement_consistent(self) -> bool:
        """The unimodular table lists exactly the unimodular algebras."""
        return self.unimodular == (self.table == 2)

    @property
    def cocycle_matches(self) -> bool:
        expected = self.table8_dim
        if self.table8_deviation is not None:
            expected = int(self.table8_deviation["recomputed"])
        return self.cocycle_dim == expected


@lru_cache(maxsize=1)
def _load() -> Tuple[int, Dict[str, CatalogueEntry]]:
    try:
        text = resources.files("lie_gcs.lie").joinpath("data/catalogue.json").read_text(
            encoding="utf-8")
        raw = json.loads(text)
        entries = [CatalogueEntry.model_validate(item) for item in raw["algebras"]]
    except (OSError, KeyError, json.JSONDecodeError, ValidationError) as e:
        logger.error(f"Failed to load the embedded catalogue: {e}")
        raise FixtureError(f"Catalogue data is unreadable: {e}")
    logger.debug(f"Loaded {len(entries)} catalogue entries")
    return int(raw.get("dim", 4)), {entry.name: entry for entry in entries}


def catalogue_entries() -> List[CatalogueEntry]:
    return list(_load()[1].values())


def catalogue_entry(name: str) -> CatalogueEntry:
    entries = _load()[1]
    if name not in entries:
        raise DomainError(f"Unknown catalogue name '{name}'. Known: {', '.join(entries)}")
    return entries[name]


def list_catalogue() -> List[str]:
    return [entry.name for entry in catalogue_entries()]


def _bindings(entry: CatalogueEntry, key: CatalogueKey) -> Dict[str, Any]:
    missing = [p for p in entry.params if p not in key.params]
    extra = [p for p in key.params if p not in entry.params]
    if missing or extra:
        raise DomainError(
            f"{entry.name} takes parameters {entry.params}; missing {missing}, unexpected {extra}")
    bindings = dict(key.params)
    for predicate in entry.domain:
        if not evaluate_predicate(predicate, bindings):
            raise DomainError(f"{key} violates the domain constraint '{predicate}'")
    for rejection in entry.rejected:
        if evaluate_predicate(rejection.when, bindings):
            raise DomainError(f"{key} is not a catalogue representative: {rejection.reason}")
    return bindings


def catalogue_build(key: CatalogueKey) -> LieAlgebra:
    """Instantiate a catalogue algebra.

    Raises:
        DomainError: On an unknown name, a missing parameter, a binding outside
            the declared domain, or a dropped representative.
    """
    entry = catalogue_entry(key.name)
    bindings = _bindings(entry, key)
    dim = _load()[0]
    brackets: Dict[Tuple[int, int], List[Any]] = {}
    for spec in entry.brackets:
        brackets[(spec.i, spec.j)] = [evaluate(c, bindings) for c in spec.coeffs]
    return LieAlgebra.from_brackets(dim, brackets, name=str(key))


def catalogue_row(key: CatalogueKey) -> TableRow:
    """The first table row whose condition holds for the bound parameters."""
    entry = catalogue_entry(key.name)
    bindings = _bindings(entry, key)
    for row in entry.rows:
        if evaluate_predicate(row.when, bindings):
            return row
    raise DomainError(f"No catalogue row matches {key}")


def sample_keys(name: str) -> List[CatalogueKey]:
    """The recorded sample parameter points of a catalogue entry."""
    entry = catalogue_entry(name)
    return [CatalogueKey(name=name, params=sample) for sample in entry.samples]


def catalogue_info(key: CatalogueKey) -> CatalogueInfo:
    algebra = catalogue_build(key)
    row = catalogue_row(key)
    info = CatalogueInfo(
        key=key,
        label=catalogue_entry(key.name).label,
        brackets=algebra.nonzero_brackets(),
        unimodular=is_unimodular(algebra),
        table=row.table,
        types=dict(row.types),
        locator=row.locator,
        cocycle_dim=two_cocycle_space(algebra).dim,
        table8_dim=row.table8_dim,
        table8_deviation=row.table8_deviation,
    )
    if not info.placement_consistent:
        logger.warning(f"{key}: unimodular={info.unimodular} but listed in Table {row.table}")
    if info.table8_deviation is not None:
        logger.warning(
            f"{key}: {row.table8_dim} free cocycle parameters listed, "
            f"recomputed {info.cocycle_dim}")
    return info


def key_from_mapping(data: Mapping[str, Any]) -> CatalogueKey:
    """Validate a ``{"name", "params"}`` mapping read from JSON or the CLI."""
    try:
        return CatalogueKey.model_validate(dict(data))
    except ValidationError as e:
        raise DomainError(f"Invalid catalogue key {dict(data)}: {e}")
