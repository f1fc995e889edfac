"""
Mechanized theorem checks.
"""

from .registry import REGISTRY, Evidence, TheoremEntry
from .verify import CatalogRun, CoverageRow, coverage_table, list_theorems, verify_all, verify_catalog, verify_theorem

__all__ = [
    "REGISTRY",
    "TheoremEntry",
    "Evidence",
    "list_theorems",
    "verify_theorem",
    "verify_all",
    "verify_catalog",
    "coverage_table",
    "CatalogRun",
    "CoverageRow",
]
