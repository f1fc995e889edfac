"""
Left localization: Ore and denominator sets, maximal denominator sets, oracles.
"""

from .maxden import (
    is_left_localizable_element,
    largest_regular_denominator_set,
    ll_radical,
    localizable_ideals,
    localize,
    max_denominator_sets,
    non_localizable_elements,
    phi_map,
)
from .oracles import (
    FractionRing,
    check_fraction_oracle,
    check_regular_collapse,
    exhaustive_denominator_sets,
    fraction_oracle,
    maxden_oracle_diff,
)
from .ore import (
    ass_set,
    core,
    denominator_join,
    is_left_denominator,
    is_left_ore,
    is_localizable_ideal,
    multiplicative_check,
    multiplicative_closure,
    right_ass_set,
    saturate,
)
from .records import DenRecord, LocView, MaxDenProfile, OracleComparison, PhiImage, PhiMap

__all__ = [
    "DenRecord", "LocView", "MaxDenProfile", "PhiImage", "PhiMap", "OracleComparison",
    "multiplicative_closure", "multiplicative_check", "is_left_ore", "ass_set", "right_ass_set",
    "is_left_denominator", "saturate", "is_localizable_ideal", "core", "denominator_join",
    "max_denominator_sets", "localize", "ll_radical", "phi_map", "localizable_ideals",
    "is_left_localizable_element", "non_localizable_elements", "largest_regular_denominator_set",
    "exhaustive_denominator_sets", "fraction_oracle", "check_fraction_oracle", "maxden_oracle_diff",
    "check_regular_collapse", "FractionRing",
]
