"""
Type definitions for the ring laboratory.
"""

from .checks import Check
from .expr import Catalog, Matrix, Product, Quotient, RingExpr, Table, Triangular, Zmod
from .report import Condition, DenSummary, FactorSummary, Report, Verdict, Witness
from .subset import Ideal, Subset, maximal_subsets, sort_subsets

__all__ = [
    # Subsets
    "Subset", "Ideal", "sort_subsets", "maximal_subsets",
    # Checks
    "Check",
    # Expressions
    "RingExpr", "Zmod", "Matrix", "Triangular", "Product", "Quotient", "Table", "Catalog",
    # Reports
    "Report", "FactorSummary", "DenSummary", "Verdict", "Condition", "Witness",
]
