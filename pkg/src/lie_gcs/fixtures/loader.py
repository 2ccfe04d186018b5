"""Loading and hash verification of the fixture corpus."""

import hashlib
import json
import logging
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from ..config.settings import GcsSettings
from ..exceptions import FixtureError
from .models import KINDS, Fixture, Manifest

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


def _read_bytes(root: Optional[Path], name: str) -> bytes:
    try:
        if root is not None:
            return (root / name).read_bytes()
        return resources.files("lie_gcs.fixtures").joinpath("data", name).read_bytes()
    except OSError as e:
        logger.error(f"Cannot read fixture file {name}: {e}")
        raise FixtureError(f"Fixture file {name} is unreadable: {e}")


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@lru_cache(maxsize=4)
def _load(root: Optional[Path]) -> Tuple[Manifest, Dict[str, Fixture]]:
    try:
        manifest = Manifest.model_validate(json.loads(_read_bytes(root, MANIFEST)))
    except (json.JSONDecodeError, ValidationError) as e:
        logger.error(f"Invalid fixture manifest: {e}")
        raise FixtureError(f"Fixture manifest is invalid: {e}")
    fixtures: Dict[str, Fixture] = {}
    for name, digest in sorted(manifest.files.items()):
        raw = _read_bytes(root, name)
        actual = sha256_hex(raw)
        if actual != digest:
            logger.error(f"{name}: hash {actual} does not match manifest {digest}")
            raise FixtureError(f"Content hash mismatch for {name}")
        try:
            items = json.loads(raw)
            for item in items:
                fixture = Fixture.model_validate(item)
                if fixture.id in fixtures:
                    raise FixtureError(f"Duplicate fixture id {fixture.id}")
                fixture.typed()
                fixtures[fixture.id] = fixture
        except (json.JSONDecodeError, ValidationError, TypeError) as e:
            logger.error(f"Invalid fixture data in {name}: {e}")
            raise FixtureError(f"Fixture file {name} is invalid: {e}")
    listed = {entry.id: entry for entry in manifest.fixtures}
    if set(listed) != set(fixtures):
        missing = sorted(set(listed) - set(fixtures))
        unlisted = sorted(set(fixtures) - set(listed))
        raise FixtureError(f"Manifest and data disagree: missing {missing}, unlisted {unlisted}")
    for fid, entry in listed.items():
        if entry.kind != fixtures[fid].kind or entry.locator != fixtures[fid].locator:
            raise FixtureError(f"Manifest entry for {fid} does not match its fixture")
    logger.debug(f"Loaded {len(fixtures)} fixtures from {len(manifest.files)} files")
    return manifest, fixtures


def load_corpus(settings: Optional[GcsSettings] = None) -> Dict[str, Fixture]:
    """Every fixture by id, after checking each file against the manifest hash.

    Raises:
        FixtureError: On unreadable or invalid files, hash mismatches or a
            manifest that does not list exactly the fixtures present.
    """
    settings = settings or GcsSettings()
    return dict(_load(settings.gcs_fixtures_dir)[1])


def load_manifest(settings: Optional[GcsSettings] = None) -> Manifest:
    settings = settings or GcsSettings()
    return _load(settings.gcs_fixtures_dir)[0]


def load_kind(kind: str, settings: Optional[GcsSettings] = None) -> List[Fixture]:
    if kind not in KINDS:
        raise FixtureError(f"Unknown fixture kind '{kind}'")
    return [f for f in load_corpus(settings).values() if f.kind == kind]


def get_fixture(fixture_id: str, settings: Optional[GcsSettings] = None) -> Fixture:
    corpus = load_corpus(settings)
    if fixture_id not in corpus:
        raise FixtureError(f"Unknown fixture '{fixture_id}'")
    return corpus[fixture_id]


def clear_cache() -> None:
    _load.cache_clear()
