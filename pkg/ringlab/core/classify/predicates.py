"""
Ring-level localizability predicates.
"""

from __future__ import annotations

import structlog

from ...errors import InvariantViolation
from ...types.checks import Check
from ...types.subset import Subset
from ..localization.maxden import localizable_ideals, max_denominator_sets
from ..ring.elements import nilpotent_elements
from ..ring.finite_ring import FiniteRing
from ..ring.ideals import quotient_ring

logger = structlog.get_logger()


def is_weakly_left_localizable(R: FiniteRing) -> Check:
    """Every non-nilpotent element is left localizable. Witness: least element that is neither."""
    L = max_denominator_sets(R).localizable
    nil = nilpotent_elements(R)
    if L & nil:
        raise InvariantViolation("a left localizable element is nilpotent", (L & nil).least())
    missing = (L | nil).complement()
    if missing:
        return Check.fail(missing.least(), "neither localizable nor nilpotent")
    return Check.ok()


def is_left_localizable_ring(R: FiniteRing) -> Check:
    """Every nonzero element is left localizable."""
    L = max_denominator_sets(R).localizable
    missing = Subset(R.order, 1).complement() - L
    if missing:
        return Check.fail(missing.least(), "nonzero element not localizable")
    return Check.ok()


def is_left_localization_maximal(R: FiniteRing) -> bool:
    """Finite form: the zero ideal is the only localizable ideal."""
    return [I.mask for I in localizable_ideals(R)] == [1]


def nil_modulo_check(R: FiniteRing, A: Subset, B: Subset) -> bool:
    """True iff the image of A in R/B consists of nilpotent elements."""
    if R.one in B:
        return True
    Q, projection = quotient_ring(R, B)
    return A.image(projection, Q.order) <= nilpotent_elements(Q)
