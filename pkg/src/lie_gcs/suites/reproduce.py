"""Golden suites over the fixture corpus plus the seeded random sweeps."""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..config.settings import GcsSettings
from ..core.expressions import evaluate_predicate
from ..core.matrix import Matrix
from ..core.scalars import decode_rational, encode_rational, qq
from ..exceptions import DomainError, LieGcsError
from ..fixtures.loader import get_fixture, load_kind
from ..fixtures.models import Fixture
from ..gcs.conditions import check_conditions
from ..gcs.courant import integrable_via_NK
from ..gcs.poisson import holomorphic_poisson_check
from ..gcs.transforms import random_c0_triple
from ..gcs.triple import build_K, form_flat
from ..kahler.structures import theorem32_structures, theorem42_scan
from ..lie.algebra import basis_vector, is_unimodular, jacobi_check, killing_restriction
from ..lie.catalogue import catalogue_build, catalogue_info, list_catalogue, sample_keys
from ..lie.families import (
    BRACKET_PARAMS,
    NORMAL_FAMILIES,
    Prop21Params,
    eq6_matrix,
    prop21_build,
    system_S_check,
    unimodular_criterion_eq5,
)
from ..utils.helpers import format_duration, safe_json_serialize
from .checks import CheckOutcome, fixture_outcomes

logger = logging.getLogger(__name__)

SUITES = ("tables3-4", "cohomology", "kahler", "appendix", "transport", "catalogue",
          "sweeps", "all")

_SUITE_KINDS = {
    "tables3-4": "triple",
    "cohomology": "cohomology_expected",
    "kahler": "kahler_pair",
    "appendix": "conjugation",
    "transport": "transport",
    "catalogue": "algebra",
}

# Values drawn for the free parameters of the normal families.
_FAMILY_VALUES = ("-2", "-1", "-1/2", "1/2", "1", "2")


@dataclass
class RunReport:
    """Outcome of one suite run, deterministic for a given corpus and seed."""
    suite: str
    seed: int
    outcomes: List[CheckOutcome] = field(default_factory=list)
    elapsed: float = 0.0
    scope: Dict[str, Any] = field(default_factory=dict)

    @property
    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "deviation": 0}
        for outcome in self.outcomes:
            counts[outcome.status] += 1
        counts["total"] = len(self.outcomes)
        return counts

    @property
    def deviations(self) -> List[Dict[str, Any]]:
        return [{"instance": o.instance, "note": o.note, "failures": o.failures}
                for o in self.outcomes if o.status == "deviation"]

    @property
    def passed(self) -> bool:
        return self.summary["fail"] == 0

    def to_json(self, timing: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "suite": self.suite,
            "seed": self.seed,
            "results": {
                o.instance: {
                    "status": o.status,
                    "fixture": o.fixture_id,
                    "checks": dict(o.checks),
                    "failures": o.failures,
                    "error": o.error,
                    "details": safe_json_serialize(o.details),
                }
                for o in self.outcomes
            },
            "deviations": self.deviations,
            "scope": safe_json_serialize(self.scope),
            "summary": self.summary,
        }
        if timing:
            data["elapsed"] = round(self.elapsed, 3)
        return data

    def render_text(self) -> str:
        lines = []
        for o in self.outcomes:
            suffix = f"  failing {', '.join(o.failures)}" if o.failures else ""
            lines.append(f"{o.status.upper():9} {o.instance}{suffix}")
            if o.status == "deviation" and o.note:
                lines.append(f"          note: {o.note}")
        s = self.summary
        lines.append(f"{self.suite}: {s['total']} instances, {s['pass']} pass, "
                     f"{s['deviation']} deviation, {s['fail']} fail "
                     f"(seed {self.seed}, {format_duration(self.elapsed)})")
        return "\n".join(lines)


def _run_fixture(fixture_id: str, fixtures_dir: Optional[Path], limit: int,
                 lambdas: Sequence[str]) -> List[CheckOutcome]:
    settings = GcsSettings(gcs_fixtures_dir=fixtures_dir)
    fixture = with_lambda_samples(get_fixture(fixture_id, settings), lambdas)
    outcomes = fixture_outcomes(fixture, limit)
    for outcome in outcomes:
        outcome.details = safe_json_serialize(outcome.details)
    return outcomes


def with_lambda_samples(fixture: Fixture, lambdas: Sequence[str]) -> Fixture:
    """Extend the samples of a ``lam`` family to every configured λ.

    An added point must satisfy the payload's ``when`` predicates; the
    recorded samples are kept as they are.
    """
    if "lam" not in fixture.params:
        return fixture
    when = fixture.payload.get("when", [])
    samples: List[Dict[str, str]] = []
    seen = set()
    for sample in fixture.samples:
        for position, lam in enumerate([sample.get("lam", "0"), *lambdas]):
            point = dict(sample, lam=encode_rational(qq(lam)))
            key = tuple(sorted(point.items()))
            if key in seen:
                continue
            if position and not _within(when, point):
                logger.debug(f"{fixture.id}: skipping lam={lam} outside {when}")
                continue
            seen.add(key)
            samples.append(point)
    return fixture.model_copy(update={"samples": samples})


def _within(when: Sequence[str], point: Mapping[str, str]) -> bool:
    bindings = {name: decode_rational(value) for name, value in point.items()}
    try:
        return all(evaluate_predicate(predicate, bindings) for predicate in when)
    except DomainError:
        return False


def run_fixtures(fixtures: Sequence[Fixture], settings: GcsSettings) -> List[CheckOutcome]:
    """Check every fixture, fanning out to worker processes when configured.

    Results are merged in fixture order whatever the completion order.
    """
    limit = settings.gcs_max_entry_bits
    lambdas = settings.gcs_lambda_samples
    if settings.gcs_workers == 1:
        outcomes: List[CheckOutcome] = []
        for fixture in fixtures:
            outcomes.extend(fixture_outcomes(with_lambda_samples(fixture, lambdas), limit))
        return outcomes
    with ProcessPoolExecutor(max_workers=settings.gcs_workers) as pool:
        futures = [pool.submit(_run_fixture, f.id, settings.gcs_fixtures_dir, limit, lambdas)
                   for f in fixtures]
        return [outcome for future in futures for outcome in future.result()]


def integrability_sweep(rng: random.Random, count: int,
                        names: Optional[Sequence[str]] = None) -> List[CheckOutcome]:
    """C1–C4 against ``N_K = 0`` on random C0-satisfying triples, per algebra."""
    outcomes = []
    for name in names or list_catalogue():
        key = sample_keys(name)[0]
        L = catalogue_build(key)
        integrable = 0
        disagreements: List[Dict[str, Any]] = []
        for index in range(count):
            t = random_c0_triple(rng)
            by_conditions = check_conditions(L, t).passed
            by_torsion = integrable_via_NK(L, build_K(t))
            integrable += by_conditions
            if by_conditions != by_torsion:
                disagreements.append({"index": index, "conditions": by_conditions,
                                      "N_K": by_torsion, "triple": t})
        outcome = CheckOutcome(f"sweep.integrability.{name}", f"sweep.integrability[{key}]")
        outcome.checks["agree"] = not disagreements
        outcome.details = {"triples": count, "integrable": integrable,
                           "disagreements": disagreements[:3]}
        logger.info(f"{key}: {count} random triples, {integrable} integrable, "
                    f"{len(disagreements)} disagreements")
        outcomes.append(outcome)
    return outcomes


def _random_params(rng: random.Random) -> Tuple[str, Prop21Params]:
    """Half the draws come from a normal family, half are free tuples."""
    if rng.random() < 0.5:
        family = NORMAL_FAMILIES[rng.choice(sorted(NORMAL_FAMILIES))]
        for _ in range(20):
            values = {name: rng.choice(_FAMILY_VALUES) for name in family.params}
            try:
                return family.name, family(lam=rng.choice(_FAMILY_VALUES), **values)
            except DomainError:
                continue
    values = {name: rng.choice(("-1", "0", "0", "1")) for name in BRACKET_PARAMS}
    return "free", Prop21Params(**values)


def system_s_sweep(rng: random.Random, count: int) -> List[CheckOutcome]:
    """System (S) against Jacobi, the unimodularity criterion against traces
    and the Killing closed form against the Killing form, on random tuples."""
    disagreements: Dict[str, List[Dict[str, Any]]] = {
        "jacobi": [], "unimodular": [], "killing": [], "family": []}
    satisfied = 0
    for _ in range(count):
        origin, p = _random_params(rng)
        L, _ = prop21_build(p)
        jacobi = jacobi_check(L).passed
        satisfied += jacobi
        if system_S_check(p).passed != jacobi:
            disagreements["jacobi"].append(p.encoded())
        if unimodular_criterion_eq5(p) != is_unimodular(L):
            disagreements["unimodular"].append(p.encoded())
        e1, e2 = basis_vector(4, 1), basis_vector(4, 2)
        if not (eq6_matrix(p) - killing_restriction(L, [e1, e2])).is_zero():
            disagreements["killing"].append(p.encoded())
        if origin != "free":
            family = NORMAL_FAMILIES[origin]
            if not jacobi or family.unimodular != unimodular_criterion_eq5(p):
                disagreements["family"].append({"family": origin, **p.encoded()})
    outcome = CheckOutcome("sweep.system_S", "sweep.system_S")
    for name, found in disagreements.items():
        outcome.checks[name] = not found
    outcome.details = {"tuples": count, "jacobi_satisfied": satisfied,
                       "disagreements": {k: v[:3] for k, v in disagreements.items()}}
    logger.info(f"System (S) sweep: {count} tuples, {satisfied} satisfy Jacobi")
    return [outcome]


def catalogue_outcomes() -> List[CheckOutcome]:
    """Jacobi, table placement and the 2-cocycle count at every sample key."""
    outcomes = []
    for name in list_catalogue():
        for key in sample_keys(name):
            outcome = CheckOutcome(f"catalogue.{name}", f"catalogue[{key}]")
            try:
                info = catalogue_info(key)
                outcome.checks["jacobi"] = jacobi_check(catalogue_build(key)).passed
                outcome.checks["placement"] = info.placement_consistent
                outcome.checks["cocycle_dim"] = info.cocycle_matches
                outcome.details = {"table": info.table, "unimodular": info.unimodular,
                                   "cocycle_dim": info.cocycle_dim}
                if info.table8_deviation is not None:
                    outcome.note = str(info.table8_deviation.get(
                        "note", "listed cocycle count differs"))
            except LieGcsError as e:
                outcome.error = str(e)
            outcomes.append(outcome)
    return outcomes


def poisson_outcomes() -> List[CheckOutcome]:
    """The holomorphic Poisson structures, and rejection of a degenerate ``R``."""
    outcomes = []
    for key, L, t in theorem32_structures():
        outcome = CheckOutcome(f"poisson.{key.name}", f"poisson[{key}]")
        report = holomorphic_poisson_check(L, t.J, t.R)
        outcome.checks["poisson"] = report.valid and report.passed
        outcome.details = {"criteria": report.criteria}
        outcomes.append(outcome)
    L = catalogue_build(sample_keys("A3_1xA1")[0])
    degenerate = holomorphic_poisson_check(L, _rotation(), form_flat(1, 2))
    outcome = CheckOutcome("poisson.rank2", "poisson.rank2_rejected")
    outcome.checks["rejected"] = not degenerate.valid
    outcome.details = {"reason": degenerate.reason}
    outcomes.append(outcome)
    return outcomes


def _rotation() -> Matrix:
    return Matrix.from_rows([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


def scan_outcome() -> CheckOutcome:
    report = theorem42_scan()
    outcome = CheckOutcome("scan.type0", "scan.type0_pairs")
    outcome.checks["no_positive_pair"] = not report.positive
    outcome.checks["poisson"] = not report.poisson_failures
    outcome.details = {"algebras": report.algebras, "candidates": report.candidates,
                       "pairs_tested": report.pairs_tested, "commuting": report.commuting}
    return outcome


def _suite_parts(suite: str) -> List[str]:
    if suite not in SUITES:
        raise DomainError(f"Unknown suite '{suite}'. Known: {', '.join(SUITES)}")
    return [s for s in SUITES if s != "all"] if suite == "all" else [suite]


def run_suite(suite: str, settings: Optional[GcsSettings] = None,
              seed: Optional[int] = None) -> RunReport:
    """Run one named suite, or every suite for ``all``.

    Args:
        suite: One of ``SUITES``
        settings: Configuration; sweep sizes, seed, workers and corpus location
        seed: Overrides ``settings.gcs_seed``

    Raises:
        DomainError: On an unknown suite name.
        FixtureError: If the corpus fails to load or verify.
    """
    settings = settings or GcsSettings()
    seed = settings.gcs_seed if seed is None else seed
    report = RunReport(suite=suite, seed=seed)
    started = time.perf_counter()
    for part in _suite_parts(suite):
        logger.info(f"Running suite {part}")
        kind = _SUITE_KINDS.get(part)
        if kind is not None:
            report.outcomes.extend(run_fixtures(load_kind(kind, settings), settings))
        if part == "catalogue":
            report.outcomes.extend(catalogue_outcomes())
        elif part == "kahler":
            report.outcomes.extend(poisson_outcomes())
            report.outcomes.append(scan_outcome())
            report.scope["type0_scan"] = "holomorphic Poisson structures, their sign flips, " \
                                         "negatives, homotheties 2 and 1/2, B-transforms by " \
                                         "cocycle basis elements times 1, -1, 2"
        elif part == "sweeps":
            rng = random.Random(seed)
            report.outcomes.extend(integrability_sweep(rng, settings.gcs_random_triples))
            report.outcomes.extend(system_s_sweep(rng, settings.gcs_random_params))
            report.scope["random_triples_per_algebra"] = settings.gcs_random_triples
            report.scope["random_parameter_tuples"] = settings.gcs_random_params
    report.elapsed = time.perf_counter() - started
    summary = report.summary
    logger.info(f"Suite {suite}: {summary['pass']} pass, {summary['deviation']} deviation, "
                f"{summary['fail']} fail in {format_duration(report.elapsed)}")
    return report

