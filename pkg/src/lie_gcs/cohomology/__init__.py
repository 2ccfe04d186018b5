"""The U• grading of a pure spinor and the cohomologies of ∂ and ∂̄."""

from .grading import DbarDelSplit, GradedDecomposition, build_grading, d_split, spinor_line
from .tables import (
    CohomologyTable,
    TableComparison,
    cohomology_from_split,
    cohomology_table,
    compare_table,
    fixture_tables,
    full_report,
)

__all__ = [
    "CohomologyTable",
    "DbarDelSplit",
    "GradedDecomposition",
    "TableComparison",
    "build_grading",
    "cohomology_from_split",
    "cohomology_table",
    "compare_table",
    "d_split",
    "fixture_tables",
    "full_report",
    "spinor_line",
]
