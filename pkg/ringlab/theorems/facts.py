"""
Shared ring facts used by the registry checks.

Decomposition-side helpers only touch ring-core operations; localization-side
helpers only touch localization and classify operations. Equivalence checks
draw their two sides from different groups.
"""

from __future__ import annotations

from typing import Optional

from ..core.classify.predicates import is_weakly_left_localizable, nil_modulo_check
from ..core.localization.maxden import max_denominator_sets
from ..core.ring.decomposition import central_idempotent_decomposition
from ..core.ring.elements import center, is_local, jacobson_radical, nil_radical, units
from ..core.ring.finite_ring import FiniteRing
from ..types.subset import Subset


# --- decomposition side ---

def local_with_nil_radical(F: FiniteRing) -> bool:
    """Local ring whose Jacobson radical is its nil radical."""
    return is_local(F) and jacobson_radical(F) == nil_radical(F)


def decomposes_into_local_nil_rad(R: FiniteRing) -> bool:
    """Every corner ring of the central decomposition is local with rad = nil radical."""
    return all(local_with_nil_radical(F) for F in central_idempotent_decomposition(R).factors)


def decomposes_into_locals(R: FiniteRing) -> bool:
    return all(is_local(F) for F in central_idempotent_decomposition(R).factors)


def is_finite_field(F: FiniteRing) -> bool:
    """Commutative with every nonzero element a unit; finite division rings are fields."""
    commutative = len(center(F)) == F.order
    return commutative and units(F) == Subset(F.order, 1).complement()


def factor_unit_preimages(R: FiniteRing) -> list[Subset]:
    """{r : e_i r is a unit of e_i R} for each primitive central idempotent e_i."""
    d = central_idempotent_decomposition(R)
    return [units(F).preimage(p) for F, p in zip(d.factors, d.projections)]


def factor_zero_preimages(R: FiniteRing) -> list[Subset]:
    """{r : e_i r = 0} for each primitive central idempotent e_i."""
    d = central_idempotent_decomposition(R)
    return [Subset(F.order, 1).preimage(p) for F, p in zip(d.factors, d.projections)]


# --- localization side ---

def localizations_wll(R: FiniteRing) -> tuple[bool, Optional[str]]:
    for record in max_denominator_sets(R).records:
        if not is_weakly_left_localizable(record.quotient):
            return False, record.S.render()
    return True, None


def pairwise_not_nil_modulo(R: FiniteRing) -> tuple[bool, Optional[str]]:
    """For S != T maximal: ass(S) is not nil modulo ass(T). Vacuous for a single set."""
    records = max_denominator_sets(R).records
    for a in records:
        for b in records:
            if a is not b and nil_modulo_check(R, a.ass, b.ass):
                return False, f"{a.ass.render()} nil modulo {b.ass.render()}"
    return True, None
