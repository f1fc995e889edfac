"""
Ring classification: localizability predicates and the consolidated report.
"""

from .predicates import (
    is_left_localizable_ring,
    is_left_localization_maximal,
    is_weakly_left_localizable,
    nil_modulo_check,
)
from .report import classification_report

__all__ = [
    "is_weakly_left_localizable",
    "is_left_localizable_ring",
    "is_left_localization_maximal",
    "nil_modulo_check",
    "classification_report",
]
