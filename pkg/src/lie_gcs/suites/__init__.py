"""Fixture checks and the ``reproduce`` suites."""

from .checks import (
    CHECKS,
    CheckOutcome,
    StructureReport,
    fixture_outcomes,
    same_triple,
    verify_structure,
)
from .reproduce import (
    SUITES,
    RunReport,
    catalogue_outcomes,
    integrability_sweep,
    poisson_outcomes,
    run_fixtures,
    run_suite,
    scan_outcome,
    system_s_sweep,
    with_lambda_samples,
)

__all__ = [
    "CHECKS",
    "SUITES",
    "CheckOutcome",
    "RunReport",
    "StructureReport",
    "catalogue_outcomes",
    "fixture_outcomes",
    "integrability_sweep",
    "poisson_outcomes",
    "run_fixtures",
    "run_suite",
    "same_triple",
    "scan_outcome",
    "system_s_sweep",
    "verify_structure",
    "with_lambda_samples",
]
