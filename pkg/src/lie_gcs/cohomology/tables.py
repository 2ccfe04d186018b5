"""Generalized Dolbeault, Bott–Chern and Aeppli cohomology dimensions."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.matrix import Matrix, kernel_basis, rank
from ..exceptions import ConsistencyError, LieGcsError, SpinorError
from ..exterior.forms import CForm, GenVector, ce_d
from ..gcs.triple import Triple
from ..lie.algebra import LieAlgebra
from ..fixtures.loader import get_fixture, load_kind
from ..fixtures.models import Fixture
from .grading import DbarDelSplit, GradedDecomposition, build_grading, d_split

logger = logging.getLogger(__name__)


@dataclass
class CohomologyTable:
    """Dimensions per degree ``−n..n``."""
    gh_del: Dict[int, int]
    gh_bc: Dict[int, int]
    gh_a: Dict[int, int]
    d_rho_zero: bool
    im_dbar_minus1_zero: bool
    gh_dbar: Dict[int, int] = field(default_factory=dict)

    def row(self, kind: str) -> Tuple[int, ...]:
        values = {"del": self.gh_del, "bc": self.gh_bc, "a": self.gh_a}[kind]
        return tuple(values[k] for k in sorted(values))

    def to_json(self) -> Dict[str, Any]:
        return {
            "gh_del": {str(k): v for k, v in sorted(self.gh_del.items())},
            "gh_bc": {str(k): v for k, v in sorted(self.gh_bc.items())},
            "gh_a": {str(k): v for k, v in sorted(self.gh_a.items())},
            "d_rho_zero": self.d_rho_zero,
            "im_dbar_minus1_zero": self.im_dbar_minus1_zero,
        }


def _rank(m: Optional[Matrix]) -> int:
    return rank(m) if m is not None else 0


def _nullity(m: Optional[Matrix], dim: int) -> int:
    return dim - _rank(m)


def _stack_nullity(parts: Sequence[Optional[Matrix]], dim: int) -> int:
    present = [m for m in parts if m is not None]
    if not present:
        return dim
    return len(kernel_basis(present[0].vstack(*present[1:])))


def _sum_rank(parts: Sequence[Optional[Matrix]]) -> int:
    present = [m for m in parts if m is not None]
    if not present:
        return 0
    return rank(present[0].hstack(*present[1:]))


def _del_dbar(split: DbarDelSplit, k: int) -> Optional[Matrix]:
    """``∂ₖ₋₁ ∘ ∂̄ₖ : Uₖ → Uₖ``."""
    if k - 1 in split.dell and k in split.dbar:
        return split.dell[k - 1] @ split.dbar[k]
    return None


def _contained(image: Optional[Matrix], kernel_of: Sequence[Optional[Matrix]]) -> bool:
    if image is None:
        return True
    return all(m is None or (m @ image).is_zero() for m in kernel_of)


def cohomology_from_split(split: DbarDelSplit, L: LieAlgebra) -> CohomologyTable:
    """Dimensions from the level matrices, with the boundary degrees cross-checked.

    Raises:
        ConsistencyError: If an image is not contained in the kernel it is
            divided out of, or the general computation disagrees with the
            closed forms at degrees ``±n``.
    """
    g = split.grading
    n = g.n
    gh_del: Dict[int, int] = {}
    gh_dbar: Dict[int, int] = {}
    gh_bc: Dict[int, int] = {}
    gh_a: Dict[int, int] = {}
    for k in g.degrees:
        dim = split.dim(k)
        dell_k, dbar_k = split.dell.get(k), split.dbar.get(k)
        dell_in, dbar_in = split.dell.get(k - 1), split.dbar.get(k + 1)
        mixed = _del_dbar(split, k)
        if not _contained(dell_in, [dell_k]) or not _contained(dbar_in, [dbar_k]):
            raise ConsistencyError(f"Image not contained in kernel at degree {k}")
        if not _contained(mixed, [dell_k, dbar_k]):
            raise ConsistencyError(f"Im ∂∂̄ not contained in ker ∂ ∩ ker ∂̄ at degree {k}")
        gh_del[k] = _nullity(dell_k, dim) - _rank(dell_in)
        gh_dbar[k] = _nullity(dbar_k, dim) - _rank(dbar_in)
        gh_bc[k] = _stack_nullity([dell_k, dbar_k], dim) - _rank(mixed)
        gh_a[k] = _nullity(mixed, dim) - _sum_rank([dell_in, dbar_in])
    d_rho_zero = ce_d(L, g.rho).is_zero()
    dbar_minus1 = split.dbar.get(-n + 1)
    im_zero = dbar_minus1 is None or dbar_minus1.is_zero()
    table = CohomologyTable(gh_del, gh_bc, gh_a, d_rho_zero, im_zero, gh_dbar)
    _check_boundary(table, n)
    _check_symmetry(table, n)
    _check_euler(table, g)
    return table


def _check_boundary(table: CohomologyTable, n: int) -> None:
    closed = 1 if table.d_rho_zero else 0
    exact = 1 if table.im_dbar_minus1_zero else 0
    expected = {
        ("del", -n): closed, ("bc", -n): closed, ("bc", n): closed,
        ("del", n): exact, ("a", -n): exact, ("a", n): exact,
    }
    values = {"del": table.gh_del, "bc": table.gh_bc, "a": table.gh_a}
    for (kind, k), value in expected.items():
        if values[kind][k] != value:
            logger.error(
                f"GH_{kind} at degree {k}: computed {values[kind][k]}, closed form {value}")
            raise ConsistencyError(
                f"Boundary degree {k} of GH_{kind} disagrees with its closed form")


def _check_symmetry(table: CohomologyTable, n: int) -> None:
    for k in range(-n, n + 1):
        if table.gh_del[k] != table.gh_dbar[-k]:
            raise ConsistencyError(
                f"GH_∂ at {k} is {table.gh_del[k]} but GH_∂̄ at {-k} is {table.gh_dbar[-k]}")


def _check_euler(table: CohomologyTable, g: GradedDecomposition) -> None:
    levels = sum((-1) ** (k % 2) * g.levels[k].dim for k in g.degrees)
    cohomology = sum((-1) ** (k % 2) * table.gh_del[k] for k in g.degrees)
    if levels != cohomology:
        raise ConsistencyError(
            f"Alternating sum of GH_∂ is {cohomology}, of the levels {levels}")


def cohomology_table(L: LieAlgebra, t: Triple, rho: Optional[CForm] = None,
                     lbar: Optional[Sequence[GenVector]] = None) -> CohomologyTable:
    """Grade, split and take dimensions for one structure."""
    grading = build_grading(L, t, rho=rho, lbar=lbar)
    table = cohomology_from_split(d_split(L, grading), L)
    logger.info(f"{L.name or 'algebra'}: GH_∂ {table.row('del')}, GH_BC {table.row('bc')}, "
                f"GH_A {table.row('a')}")
    return table


@dataclass
class TableComparison:
    """One fixture's computed table against its expected dimensions."""
    fixture_id: str
    computed: Optional[CohomologyTable]
    mismatches: List[Dict[str, Any]] = field(default_factory=list)
    error: Optional[str] = None
    deviation: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.mismatches


def compare_table(fixture_id: str, table: CohomologyTable,
                  expected: Dict[str, Any]) -> TableComparison:
    """Per-degree comparison; each mismatch names the kind, degree and both values."""
    result = TableComparison(fixture_id, table)
    computed = table.to_json()
    for kind in ("gh_del", "gh_bc", "gh_a"):
        for degree, value in expected.get(kind, {}).items():
            got = computed[kind].get(str(degree))
            if got != value:
                result.mismatches.append(
                    {"kind": kind, "degree": int(degree), "expected": value, "computed": got})
    for flag in ("d_rho_zero", "im_dbar_minus1_zero"):
        if flag in expected and expected[flag] != computed[flag]:
            result.mismatches.append(
                {"kind": flag, "degree": None, "expected": expected[flag],
                 "computed": computed[flag]})
    return result


def fixture_tables(fixture: Fixture) -> List[TableComparison]:
    """Tables for every sample point of one ``cohomology_expected`` fixture.

    The listed spinor is tried first; if it is not annihilated by ``L`` the
    computed one is used and the substitution is recorded as a deviation.
    """
    payload = fixture.typed()
    source = get_fixture(payload.triple)
    structure = source.typed()
    expected = payload.expected.model_dump()
    results: List[TableComparison] = []
    for bindings in fixture.bindings():
        instance = fixture.instance_id(bindings)
        deviation = fixture.deviation
        try:
            L = structure.algebra.build(bindings)
            t = structure.triple.build(bindings)
            try:
                table = cohomology_table(L, t, rho=structure.rho_form(bindings))
            except SpinorError as e:
                logger.warning(f"{instance}: listed spinor rejected ({e}), recomputing it")
                deviation = deviation or "listed ρ is not the pure spinor of the structure"
                table = cohomology_table(L, t)
        except LieGcsError as e:
            logger.error(f"{instance}: {e}")
            results.append(TableComparison(instance, None, error=str(e), deviation=deviation))
            continue
        comparison = compare_table(instance, table, expected)
        comparison.deviation = deviation
        for m in comparison.mismatches:
            logger.warning(f"{instance}: {m['kind']} at degree {m['degree']}: "
                           f"expected {m['expected']}, computed {m['computed']}")
        results.append(comparison)
    return results


def full_report(fixtures: Optional[Sequence[Fixture]] = None) -> List[TableComparison]:
    """Compute and compare the table of every cohomology fixture in the corpus."""
    entries = fixtures if fixtures is not None else load_kind("cohomology_expected")
    results: List[TableComparison] = []
    for fixture in entries:
        results.extend(fixture_tables(fixture))
    mismatched = sum(1 for r in results if not r.passed)
    logger.info(f"Cohomology report: {len(results)} tables, {mismatched} with differences")
    return results
