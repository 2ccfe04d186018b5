"""Command-line interface: ``lie-gcs <command> ...``.

Every command prints canonical JSON with ``--json`` (or
``GCS_OUTPUT_FORMAT=json``) and a short text rendering otherwise. Exit codes
are 0 on success, 1 when a check fails or the engine rejects its input
mathematically, and 2 when an input file or argument cannot be read.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field, ValidationError

from . import __version__
from .cohomology.tables import cohomology_table
from .config.settings import GcsSettings, OutputFormat
from .core.matrix import Matrix
from .core.scalars import decode_rational, encode_rational
from .exceptions import FixtureError, LieGcsError
from .exterior.forms import CForm, GenVector
from .fixtures.loader import get_fixture
from .fixtures.models import AlgebraRef, Bindings
from .gcs.conditions import check_conditions
from .gcs.transforms import apply_ops, transport
from .gcs.triple import Triple, endomorphism_from_text, skew_from_text
from .kahler.pairs import KahlerPair, verify_pair
from .kahler.structures import bihermitian_check, theorem41_fixture
from .lie.algebra import LieAlgebra
from .lie.catalogue import CatalogueKey, catalogue_entry, catalogue_info, list_catalogue
from .suites.checks import verify_structure
from .suites.reproduce import SUITES, run_suite
from .utils.helpers import canonical_dumps, encode_triple, safe_json_serialize

logger = logging.getLogger(__name__)

MatrixInput = Union[str, List[List[Union[str, int]]]]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


# Pydantic models for input files
class TripleInput(BaseModel):
    """A structure on a catalogue algebra, given inline or as a corpus id."""
    fixture: Optional[str] = Field(default=None,
                                   description="Id of a triple fixture, e.g. 't3.A4_3'")
    algebra: Optional[AlgebraRef] = Field(default=None, description="Catalogue name and parameters")
    J: Optional[MatrixInput] = Field(default=None, description="Endomorphism, text or rows")
    R: Optional[MatrixInput] = Field(default=None, description="Skew map 𝔤* → 𝔤")
    sigma: Optional[MatrixInput] = Field(default=None, description="Skew map 𝔤 → 𝔤*")
    rho: Optional[str] = Field(default=None, description="Pure spinor, e.g. 'f2 + I*f3'")
    params: Dict[str, Union[str, int]] = Field(default_factory=dict,
                                               description="Parameter bindings for the text fields")


class PairInput(BaseModel):
    """A generalized Kähler pair: a recorded name, a corpus id or two inline triples."""
    name: Optional[str] = Field(default=None, description="One of A3_6xA1, A2x2A1, 2A2, A4_6")
    fixture: Optional[str] = Field(default=None, description="Id of a kahler_pair fixture")
    algebra: Optional[AlgebraRef] = Field(default=None, description="Catalogue name and parameters")
    first: Optional[Dict[str, MatrixInput]] = Field(default=None, description="J, R, sigma of K₁")
    second: Optional[Dict[str, MatrixInput]] = Field(default=None,
                                                     description="J, R, sigma of K₂")
    params: Dict[str, Union[str, int]] = Field(default_factory=dict,
                                               description="Parameter bindings")


class MatrixFile(BaseModel):
    """An automorphism, a B-field or a passage matrix."""
    matrix: Optional[MatrixInput] = Field(default=None, description="Text or rows")
    passage: Optional[List[str]] = Field(default=None,
                                         description="Target basis vectors in source coordinates")


# Input parsing
def _read_json(path: Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Cannot read {path}: {e}")
        raise FixtureError(f"Cannot read {path}: {e}")


def _validate(model: Any, data: Any, path: Path) -> Any:
    if isinstance(data, (str, list)) and model is MatrixFile:
        data = {"matrix": data}
    try:
        return model.model_validate(data)
    except ValidationError as e:
        logger.error(f"Invalid input in {path}: {e}")
        raise FixtureError(f"Invalid input in {path}: {e}")


def _bindings(raw: Dict[str, Any]) -> Bindings:
    try:
        return {str(k): decode_rational(v) for k, v in raw.items()}
    except (LieGcsError, TypeError, ValueError, ZeroDivisionError) as e:
        raise FixtureError(f"Parameter values must be rationals: {e}")


def to_matrix(value: MatrixInput, skew: bool, bindings: Bindings, n: int = 4) -> Matrix:
    """Read a text combination (``E``- or ``f``-units) or explicit rows."""
    if isinstance(value, str):
        if skew:
            return skew_from_text(value, n, bindings)
        return endomorphism_from_text(value, n, bindings)
    try:
        return Matrix.from_rows([[decode_rational(x) for x in row] for row in value])
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise FixtureError(f"Matrix rows must hold rationals: {e}")


def _triple(blocks: Dict[str, Any], bindings: Bindings) -> Triple:
    missing = [name for name in ("J", "R", "sigma") if blocks.get(name) is None]
    if missing:
        raise FixtureError(f"Triple is missing {missing}")
    return Triple(to_matrix(blocks["J"], False, bindings), to_matrix(blocks["R"], True, bindings),
                  to_matrix(blocks["sigma"], True, bindings))


def load_triple(path: Path, overrides: Bindings,
                settings: GcsSettings) -> Tuple[LieAlgebra, Triple, Optional[CForm]]:
    """Algebra, triple and optional spinor named by a ``--triple`` file.

    A fixture reference starts from the fixture's first sample point; inline
    ``params`` and then the command-line bindings override it.
    """
    spec = _validate(TripleInput, _read_json(path), path)
    if spec.fixture is not None:
        fixture = get_fixture(spec.fixture, settings)
        if fixture.kind != "triple":
            raise FixtureError(f"{spec.fixture} is a {fixture.kind} fixture, not a triple")
        bindings = {**fixture.bindings()[0], **_bindings(spec.params), **overrides}
        payload = fixture.typed()
        return (payload.algebra.build(bindings), payload.triple.build(bindings),
                payload.rho_form(bindings))
    if spec.algebra is None:
        raise FixtureError(f"{path} names neither a fixture nor an algebra")
    bindings = {**_bindings(spec.params), **overrides}
    L = spec.algebra.build(bindings)
    t = _triple({"J": spec.J, "R": spec.R, "sigma": spec.sigma}, bindings)
    rho = CForm.from_text(spec.rho, L.dim, bindings) if spec.rho else None
    return L, t, rho


def load_matrix(path: Path, skew: bool, bindings: Bindings) -> Matrix:
    spec = _validate(MatrixFile, _read_json(path), path)
    if spec.passage is not None:
        return Matrix.from_columns([GenVector.from_text(v, 4, bindings).X for v in spec.passage])
    if spec.matrix is None:
        raise FixtureError(f"{path} holds neither 'matrix' nor 'passage'")
    return to_matrix(spec.matrix, skew, bindings)


def parse_binding(text: str) -> Tuple[str, Any]:
    """``alpha=1/2`` as an argparse type."""
    name, sep, value = text.partition("=")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"Expected k=v, got '{text}'")
    try:
        return name.strip(), decode_rational(value.strip())
    except (LieGcsError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"'{value}' is not a rational")


def _command_bindings(args: argparse.Namespace) -> Bindings:
    bindings: Bindings = {}
    if args.params_file is not None:
        raw = _read_json(args.params_file)
        if not isinstance(raw, dict):
            raise FixtureError(f"{args.params_file} must hold a JSON object")
        bindings.update(_bindings(raw))
    bindings.update(dict(getattr(args, "param", None) or []))
    return bindings


# Commands: each returns the JSON payload and whether everything passed
def _format_vector(coeffs: Sequence[Any]) -> str:
    terms = []
    for k, c in enumerate(coeffs, start=1):
        if not c:
            continue
        text = encode_rational(c)
        if text == "1":
            terms.append(f"e{k}")
        elif text == "-1":
            terms.append(f"-e{k}")
        else:
            terms.append(f"{text}*e{k}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def cmd_catalogue(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    if args.action == "list":
        return {"algebras": {name: catalogue_entry(name).params for name in list_catalogue()}}, True
    if not args.name:
        raise FixtureError("catalogue show needs an algebra name")
    info = catalogue_info(CatalogueKey(name=args.name, params=_command_bindings(args)))
    return {
        "key": info.key.encoded(),
        "label": info.label,
        "brackets": {f"[e{i},e{j}]": _format_vector(v)
                     for (i, j), v in sorted(info.brackets.items())},
        "unimodular": info.unimodular,
        "table": info.table,
        "types": info.types,
        "locator": info.locator,
        "cocycle_dim": info.cocycle_dim,
        "cocycle_dim_listed": info.table8_dim,
    }, info.placement_consistent and info.cocycle_matches


def cmd_verify(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    L, t, rho = load_triple(args.triple, _command_bindings(args), settings)
    report = verify_structure(L, t, full=args.full)
    result: Dict[str, Any] = {
        "algebra": L.name,
        "checks": report.checks,
        "passed": report.passed,
        "type": report.type,
        "conditions": report.conditions.results,
    }
    if not report.almost.passed:
        result["almost_witnesses"] = report.almost.witnesses
    if report.conditions.witnesses:
        result["witnesses"] = report.conditions.witnesses
    if args.full:
        result["spinor"] = report.spinor
        result["admissible"] = report.admissible
        result["calabi_yau"] = report.calabi_yau
    return result, report.passed


def cmd_cohomology(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    L, t, rho = load_triple(args.triple, _command_bindings(args), settings)
    table = cohomology_table(L, t, rho=rho)
    return {"algebra": L.name, **table.to_json(),
            "gh_dbar": {str(k): v for k, v in sorted(table.gh_dbar.items())}}, True


def _load_pair(path: Path, overrides: Bindings,
               settings: GcsSettings) -> Tuple[KahlerPair, Optional[str], Bindings]:
    spec = _validate(PairInput, _read_json(path), path)
    bindings = {**_bindings(spec.params), **overrides}
    name = spec.name
    if spec.fixture is not None:
        fixture = get_fixture(spec.fixture, settings)
        if fixture.kind != "kahler_pair":
            raise FixtureError(f"{spec.fixture} is a {fixture.kind} fixture, not a pair")
        bindings = {**fixture.bindings()[0], **bindings}
        name = fixture.typed().name
    if name is not None:
        return theorem41_fixture(name, bindings), name, bindings
    if spec.algebra is None or spec.first is None or spec.second is None:
        raise FixtureError(f"{path} needs a name, a fixture or algebra/first/second")
    L = spec.algebra.build(bindings)
    pair = KahlerPair(L, _triple(spec.first, bindings), _triple(spec.second, bindings))
    return pair, None, bindings


def cmd_kahler(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    pair, name, bindings = _load_pair(args.pair, _command_bindings(args), settings)
    verification = verify_pair(pair)
    result: Dict[str, Any] = {"algebra": pair.L.name, "verification": verification,
                              "passed": verification.passed}
    passed = verification.passed
    if name is not None:
        report = bihermitian_check(name, bindings)
        result["bihermitian"] = {
            "passed": report.passed,
            "flat": report.flat,
            "einstein": report.einstein,
            "ricci_matches": report.ricci_matches,
            "metric_matches_pair": report.metric_matches_pair,
        }
        passed = passed and report.passed
    return result, passed


def cmd_transform(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    bindings = _command_bindings(args)
    L, t, _ = load_triple(args.triple, bindings, settings)
    ops: List[Dict[str, Any]] = []
    if args.bfield is not None:
        ops.append({"op": "b", "B": load_matrix(args.bfield, True, bindings)})
    if args.auto is not None:
        ops.append({"op": "phi", "A": load_matrix(args.auto, False, bindings)})
    result = apply_ops(L, t, ops)
    return {"algebra": L.name, "triple": encode_triple(result)}, True


def cmd_transport(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Dict[str, Any], bool]:
    bindings = _command_bindings(args)
    source, t, _ = load_triple(args.triple, bindings, settings)
    target = AlgebraRef(name=args.target, params={
        k: encode_rational(v) for k, v in (args.target_param or [])}).build(bindings)
    moved = transport(load_matrix(args.iso, False, bindings), t, source, target)
    return {"source": source.name, "target": target.name, "triple": encode_triple(moved),
            "integrable": check_conditions(target, moved).passed}, True


def cmd_reproduce(args: argparse.Namespace, settings: GcsSettings) -> Tuple[Any, bool]:
    report = run_suite(args.suite, settings)
    return report, report.passed


COMMANDS = {
    "catalogue": cmd_catalogue,
    "verify": cmd_verify,
    "cohomology": cmd_cohomology,
    "kahler": cmd_kahler,
    "transform": cmd_transform,
    "transport": cmd_transport,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie-gcs",
        description="Generalized complex and Kähler structures on 4-dimensional Lie algebras")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="Print canonical JSON")
    parser.add_argument("--seed", type=int, help="Seed for the random sweeps")
    parser.add_argument("--params-file", type=Path, help="JSON object of parameter bindings")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--param", action="append", type=parse_binding, metavar="K=V",
                       help="Bind a parameter; repeatable")
        return p

    p = with_params(sub.add_parser("catalogue", help="List or show catalogue algebras"))
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")

    p = with_params(sub.add_parser("verify", help="Check integrability of a triple"))
    p.add_argument("--triple", type=Path, required=True)
    p.add_argument("--full", action="store_true", help="Also spinor, X + ξ and Calabi–Yau")

    p = with_params(sub.add_parser("cohomology", help="Generalized Dolbeault dimension table"))
    p.add_argument("--triple", type=Path, required=True)

    p = with_params(sub.add_parser("kahler", help="Verify a generalized Kähler pair"))
    p.add_argument("--pair", type=Path, required=True)

    p = with_params(sub.add_parser("transform", help="Apply exp(B) then φ(T)"))
    p.add_argument("--triple", type=Path, required=True)
    p.add_argument("--auto", type=Path, help="Automorphism T")
    p.add_argument("--bfield", type=Path, help="2-cocycle B")

    p = with_params(sub.add_parser("transport", help="Move a triple along an isomorphism"))
    p.add_argument("--triple", type=Path, required=True)
    p.add_argument("--iso", type=Path, required=True)
    p.add_argument("--target", required=True, help="Target catalogue name")
    p.add_argument("--target-param", action="append", type=parse_binding, metavar="K=V")

    p = sub.add_parser("reproduce", help="Run a golden suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    return parser


def _render_text(payload: Any) -> str:
    if hasattr(payload, "render_text"):
        return payload.render_text()
    data = safe_json_serialize(payload)
    lines = []
    for key, value in data.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, ensure_ascii=False)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None, settings: Optional[GcsSettings] = None) -> int:
    """Parse ``argv``, run one command and print its result; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        settings = settings or GcsSettings()
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_INPUT
    updates: Dict[str, Any] = {}
    if args.seed is not None:
        updates["gcs_seed"] = args.seed
    if args.json:
        updates["gcs_output_format"] = OutputFormat.JSON
    settings = settings.model_copy(update=updates)

    try:
        payload, passed = COMMANDS[args.command](args, settings)
    except FixtureError as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except LieGcsError as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED

    if settings.gcs_output_format == OutputFormat.JSON:
        print(canonical_dumps(payload.to_json() if hasattr(payload, "to_json") else payload))
    else:
        print(_render_text(payload))
    return EXIT_OK if passed else EXIT_FAILED


def main() -> None:
    """Entry point for the ``lie-gcs`` console script."""
    try:
        settings = GcsSettings()
        logging.basicConfig(level=settings.gcs_log_level,
                            format="%(levelname)s %(name)s: %(message)s")
    except ValidationError as e:
        logging.basicConfig(level=logging.INFO)
        logger.error(f"Invalid configuration: {e}")
        sys.exit(EXIT_INPUT)
    try:
        sys.exit(run(settings=settings))
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        sys.exit(EXIT_FAILED)
    except Exception as e:
        logger.error(f"lie-gcs failed: {e}")
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":
    main()
