"""Checks run for each fixture instance and by the ``verify`` command."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..cohomology.grading import spinor_line
from ..cohomology.tables import fixture_tables
from ..core.expressions import evaluate, evaluate_predicate
from ..exceptions import LieGcsError, TransportError
from ..exterior.forms import CForm, GenVector, ce_d, is_proportional
from ..fixtures.models import Fixture
from ..gcs.conditions import ConditionsReport, check_conditions
from ..gcs.courant import integrable_via_NK
from ..gcs.spinor import is_admissible, is_calabi_yau, pure_spinor_type1, spinor_integrability
from ..gcs.transforms import apply_ops, transport
from ..gcs.triple import AlmostReport, Triple, almost_check, build_K, sign_flip, type_of
from ..kahler.structures import bihermitian_check, theorem41_fixture
from ..kahler.pairs import verify_pair
from ..lie.algebra import (LieAlgebra, cocycle_basis, is_automorphism, is_cocycle, is_homomorphism,
                           is_unimodular, jacobi_check)
from ..lie.catalogue import catalogue_build
from ..lie.families import normal_family, prop21_build
from ..utils.helpers import warn_growth

logger = logging.getLogger(__name__)

DEFAULT_BITS = 4096


@dataclass
class CheckOutcome:
    """Named boolean checks for one fixture instance.

    ``status`` is ``pass`` when every check holds and no deviation is noted,
    ``deviation`` when a note is present and every failure is tolerated by
    it, and ``fail`` otherwise.
    """
    fixture_id: str
    instance: str
    checks: Dict[str, bool] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)
    note: Optional[str] = None
    tolerated: Tuple[str, ...] = ()
    error: Optional[str] = None

    @property
    def failures(self) -> List[str]:
        failed = [name for name, ok in self.checks.items() if not ok]
        if self.error is not None:
            failed.append("error")
        return failed

    @property
    def status(self) -> str:
        failures = self.failures
        if not failures:
            return "deviation" if self.note else "pass"
        if self.note and set(failures) <= set(self.tolerated):
            return "deviation"
        return "fail"


def same_triple(a: Triple, b: Triple) -> bool:
    return ((a.J - b.J).is_zero() and (a.R - b.R).is_zero()
            and (a.sigma - b.sigma).is_zero())


@dataclass
class StructureReport:
    """What ``verify`` establishes about one triple on one algebra."""
    almost: AlmostReport
    conditions: ConditionsReport
    nk: bool
    type: Optional[int] = None
    spinor: Optional[CForm] = None
    admissible: Optional[GenVector] = None
    calabi_yau: Optional[bool] = None
    full: bool = False

    @property
    def checks(self) -> Dict[str, bool]:
        result = {
            "C0": self.almost.passed,
            "conditions": self.conditions.passed,
            "N_K": self.nk,
        }
        if self.almost.passed:
            result["N_K_agrees"] = self.nk == self.conditions.passed
        if self.full and self.conditions.passed:
            result["spinor_integrable"] = self.admissible is not None
        return result

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_structure(L: LieAlgebra, t: Triple, full: bool = False) -> StructureReport:
    """C0, C1–C4 and ``N_K = 0``; with ``full`` also the pure spinor, one
    ``X + ξ`` with ``dρ = (X + ξ)·ρ`` and the Calabi–Yau flag.

    Raises:
        DimensionError: If the triple and the algebra have different dimensions.
        ConsistencyError: If two computations of the type or of the
            Calabi–Yau condition disagree.
    """
    almost = almost_check(t)
    conditions = check_conditions(L, t)
    report = StructureReport(almost, conditions, integrable_via_NK(L, build_K(t)), full=full)
    if not almost.passed:
        return report
    report.type = type_of(t)
    if full and conditions.passed:
        if report.type == 1 and L.dim == 4:
            report.spinor = pure_spinor_type1(L, t).rho
            report.calabi_yau = is_calabi_yau(L, t)
        else:
            report.spinor = spinor_line(L, t)
            report.calabi_yau = ce_d(L, report.spinor).is_zero()
        report.admissible = spinor_integrability(L, report.spinor)
    logger.debug(f"{L.name or 'algebra'}: type {report.type}, checks {report.checks}")
    return report


def _outcome(fixture: Fixture, bindings: Mapping[str, Any]) -> CheckOutcome:
    return CheckOutcome(fixture.id, fixture.instance_id(bindings), note=fixture.deviation,
                        tolerated=tuple(fixture.tolerated))


def check_triple(fixture: Fixture, bindings: Mapping[str, Any],
                 limit: int = DEFAULT_BITS) -> CheckOutcome:
    """A listed structure: integrability, its type, the listed spinor and ``X + ξ``."""
    payload = fixture.typed()
    outcome = _outcome(fixture, bindings)
    L = payload.algebra.build(bindings)
    t = payload.triple.build(bindings)
    report = verify_structure(L, t, full=True)
    outcome.checks.update(report.checks)
    outcome.checks["type"] = report.type == payload.type
    outcome.details["type"] = report.type
    outcome.details["calabi_yau"] = report.calabi_yau
    if report.conditions.witnesses:
        outcome.details["witnesses"] = report.conditions.witnesses
    listed = payload.rho_form(bindings)
    if listed is not None and report.spinor is not None:
        outcome.checks["spinor"] = is_proportional(listed, report.spinor) is not None
        v = payload.admissible_vector(bindings)
        if v is not None:
            outcome.checks["admissible"] = is_admissible(L, listed, v)
    return outcome


def check_conjugation(fixture: Fixture, bindings: Mapping[str, Any],
                      limit: int = DEFAULT_BITS) -> CheckOutcome:
    """Replay a recorded operation sequence and compare with the stated target.

    The ops act as recorded; that each ``T`` is an automorphism and each ``B``
    a cocycle are separate checks, so a wrong entry shows up by name.
    """
    payload = fixture.typed()
    outcome = _outcome(fixture, bindings)
    outcome.checks["domain"] = all(evaluate_predicate(w, bindings) for w in payload.when)
    L = payload.algebra.build(bindings)
    source = payload.source.build(bindings)
    target = payload.target.build(bindings)
    ops = [op.resolve(bindings) for op in payload.ops]
    automorphisms = [op["A"] for op in ops if op["op"] == "phi"]
    fields = [op["B"] for op in ops if op["op"] == "b"]
    if automorphisms:
        outcome.checks["automorphisms"] = all(is_automorphism(L, A) for A in automorphisms)
    if fields:
        outcome.checks["cocycles"] = all(is_cocycle(L, B) for B in fields)
    result = apply_ops(None, source, ops)
    warn_growth(outcome.instance, build_K(result).K, limit)
    outcome.checks["source_integrable"] = check_conditions(L, source).passed
    outcome.checks["target_integrable"] = check_conditions(L, target).passed
    outcome.checks["identity"] = same_triple(result, target)
    if not outcome.checks["identity"]:
        outcome.details["computed"] = result
    return outcome


def check_transport(fixture: Fixture, bindings: Mapping[str, Any],
                    limit: int = DEFAULT_BITS) -> CheckOutcome:
    """Transport the canonical structure of a normal family along a recorded
    isomorphism and, when a printed image exists, compare with it up to the
    recorded equivalence."""
    payload = fixture.typed()
    outcome = _outcome(fixture, bindings)
    outcome.checks["domain"] = all(evaluate_predicate(w, bindings) for w in payload.when)
    values = {name: evaluate(text, bindings) for name, text in payload.values.items()}
    params = normal_family(payload.family)(lam=evaluate(payload.lam, bindings),
                                           scale=evaluate(payload.a, bindings), **values)
    source, t0 = prop21_build(params)
    outcome.checks["source_jacobi"] = jacobi_check(source).passed
    target = payload.target.build(bindings)
    P = payload.passage_matrix(bindings)
    outcome.checks["isomorphism"] = (P.inverse() is not None
                                     and is_homomorphism(target, source, P))
    if not outcome.checks["isomorphism"]:
        return outcome
    try:
        moved = transport(P, t0, source, target)
    except TransportError as e:
        outcome.checks["target_integrable"] = False
        outcome.details["transport"] = str(e)
        return outcome
    outcome.checks["target_integrable"] = True
    warn_growth(outcome.instance, build_K(moved).K, limit)
    if payload.expected is None:
        return outcome
    printed = payload.expected.build(bindings)
    expected = sign_flip(printed) if payload.equivalence == "sign_flip" else printed
    outcome.checks["printed_integrable"] = check_conditions(target, printed).passed
    outcome.checks["expected"] = same_triple(moved, expected)
    outcome.details["equivalence"] = payload.equivalence
    if not outcome.checks["expected"]:
        outcome.details["computed"] = moved
    return outcome


def check_kahler(fixture: Fixture, bindings: Mapping[str, Any],
                 limit: int = DEFAULT_BITS) -> CheckOutcome:
    """A recorded pair with its bihermitian data."""
    payload = fixture.typed()
    outcome = _outcome(fixture, bindings)
    pair = theorem41_fixture(payload.name, bindings)
    verification = verify_pair(pair)
    bihermitian = bihermitian_check(payload.name, bindings)
    outcome.checks["integrable"] = all(verification.integrable)
    outcome.checks["positive"] = verification.positive == payload.positive
    outcome.checks["eq13"] = verification.eq13
    outcome.checks["type_constraints"] = verification.prop41.passed
    outcome.checks["bihermitian"] = bihermitian.passed
    if payload.name == "A3_6xA1":
        outcome.checks["flat"] = bihermitian.flat
    if payload.name == "2A2" and bindings["r"] * bindings["rho"] == 1:
        outcome.checks["einstein"] = (bihermitian.einstein is not None
                                      and bihermitian.einstein < 0)
    outcome.details["signature"] = verification.signature
    outcome.details["metric_matches_pair"] = bihermitian.metric_matches_pair
    outcome.details["einstein"] = bihermitian.einstein
    return outcome


def check_algebra(fixture: Fixture, bindings: Mapping[str, Any],
                  limit: int = DEFAULT_BITS) -> CheckOutcome:
    """Brackets, unimodularity and the 2-cocycle dimension of a catalogue key."""
    payload = fixture.typed()
    outcome = _outcome(fixture, bindings)
    L = catalogue_build(payload.algebra.key(bindings))
    basis = cocycle_basis(L)
    outcome.checks["brackets"] = L.nonzero_brackets() == payload.expected_brackets()
    outcome.checks["jacobi"] = jacobi_check(L).passed
    outcome.checks["unimodular"] = is_unimodular(L) == payload.unimodular
    outcome.checks["cocycle_dim"] = len(basis) == payload.cocycle_dim
    outcome.checks["cocycles_closed"] = all(is_cocycle(L, B) for B in basis)
    outcome.details["cocycle_dim"] = len(basis)
    return outcome


def cohomology_outcomes(fixture: Fixture) -> List[CheckOutcome]:
    """One outcome per sample point; each compared quantity is its own check."""
    outcomes = []
    for comparison in fixture_tables(fixture):
        outcome = CheckOutcome(fixture.id, comparison.fixture_id, note=comparison.deviation,
                               tolerated=tuple(fixture.tolerated), error=comparison.error)
        if comparison.computed is not None:
            for name in ("gh_del", "gh_bc", "gh_a", "d_rho_zero", "im_dbar_minus1_zero"):
                outcome.checks[name] = True
            for mismatch in comparison.mismatches:
                outcome.checks[mismatch["kind"]] = False
            outcome.details["computed"] = comparison.computed.to_json()
            if comparison.mismatches:
                outcome.details["mismatches"] = comparison.mismatches
        outcomes.append(outcome)
    return outcomes


CHECKS = {
    "algebra": check_algebra,
    "triple": check_triple,
    "conjugation": check_conjugation,
    "kahler_pair": check_kahler,
    "transport": check_transport,
}


def fixture_outcomes(fixture: Fixture, limit: int = DEFAULT_BITS) -> List[CheckOutcome]:
    """Run the check of the fixture's kind at every sample point.

    Engine errors are recorded on the outcome; they never abort the suite.
    """
    if fixture.kind == "cohomology_expected":
        return cohomology_outcomes(fixture)
    check = CHECKS[fixture.kind]
    outcomes = []
    for bindings in fixture.bindings():
        try:
            outcome = check(fixture, bindings, limit)
        except LieGcsError as e:
            logger.error(f"{fixture.instance_id(bindings)}: {e}")
            outcome = _outcome(fixture, bindings)
            outcome.error = str(e)
        if outcome.status == "fail":
            logger.warning(f"{outcome.instance}: failing {outcome.failures}")
        outcomes.append(outcome)
    return outcomes
