"""
Element classes and radicals of a finite ring.

Everything here works on boolean vectors indexed by element and returns
`Subset`/`Ideal` values. Results are cached per ring; rings are immutable.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import structlog

from ...config import config
from ...errors import InvariantViolation
from ...types.subset import Ideal, Subset
from .finite_ring import FiniteRing
from .ideals import enumerate_ideals, ideal_generated, is_ideal, principal_ideal

logger = structlog.get_logger()


def _unit_flags(R: FiniteRing) -> np.ndarray:
    inverse = R.mul == R.one
    # uv = 1 and vu = 1 for some v
    return (inverse & inverse.T).any(axis=1)


@lru_cache(maxsize=256)
def left_regular_elements(R: FiniteRing) -> Subset:
    """Elements r with rx = 0 only for x = 0."""
    return Subset.from_bools((R.mul == 0).sum(axis=1) == 1)


@lru_cache(maxsize=256)
def right_regular_elements(R: FiniteRing) -> Subset:
    """Elements r with xr = 0 only for x = 0."""
    return Subset.from_bools((R.mul == 0).sum(axis=0) == 1)


@lru_cache(maxsize=256)
def units(R: FiniteRing) -> Subset:
    """Two-sided units. In a finite ring these are exactly the one-sided invertible and the regular elements."""
    result = Subset.from_bools(_unit_flags(R))
    if config.checks.postconditions:
        left_invertible = Subset.from_bools((R.mul == R.one).any(axis=1))
        if left_invertible != result:
            raise InvariantViolation("left-invertible elements differ from units", (left_invertible - result).least())
        for regular in (left_regular_elements(R), right_regular_elements(R)):
            if regular != result:
                raise InvariantViolation("regular elements differ from units", ((regular - result) | (result - regular)).least())
    return result


@lru_cache(maxsize=256)
def nilpotent_elements(R: FiniteRing) -> Subset:
    """{r : r^k = 0 for some k <= order}."""
    power = R.elements.copy()
    nil = power == 0
    for _ in range(R.order - 1):
        power = R.mul[power, R.elements]
        nil |= power == 0
    return Subset.from_bools(nil)


def is_nil(R: FiniteRing, X: Subset) -> bool:
    return X <= nilpotent_elements(R)


@lru_cache(maxsize=256)
def jacobson_radical(R: FiniteRing) -> Ideal:
    """{r : 1 - xr is a unit for every x}."""
    unit = _unit_flags(R)
    one_minus = R.add[R.one, R.neg[R.mul]]  # [x, r] -> 1 - xr
    result = Ideal.from_bools(unit[one_minus].all(axis=0))
    if config.checks.postconditions and not is_ideal(R, result):
        raise InvariantViolation("Jacobson radical is not an ideal", result.render())
    return result


@lru_cache(maxsize=256)
def nil_radical(R: FiniteRing) -> Ideal:
    """Largest nil ideal: generated by the elements whose principal ideal is nil."""
    nil = nilpotent_elements(R)
    candidates = [x for x in nil if principal_ideal(R, x) <= nil]
    result = ideal_generated(R, candidates)
    if config.checks.postconditions:
        if not result <= nil:
            raise InvariantViolation("nil radical is not nil", (result - nil).least())
        for I in enumerate_ideals(R):
            if I <= nil and not I <= result:
                raise InvariantViolation("nil ideal outside the nil radical", I.render())
        if not result <= jacobson_radical(R):
            raise InvariantViolation("nil radical not inside the Jacobson radical", result.render())
    logger.debug("nil_radical", ring=R.label, size=len(result))
    return result


@lru_cache(maxsize=256)
def center(R: FiniteRing) -> Subset:
    return Subset.from_bools((R.mul == R.mul.T).all(axis=1))


@lru_cache(maxsize=256)
def idempotents(R: FiniteRing) -> Subset:
    idx = R.elements
    return Subset.from_bools(R.mul[idx, idx] == idx)


def central_idempotents(R: FiniteRing) -> Subset:
    return idempotents(R) & center(R)


def is_local(R: FiniteRing) -> bool:
    """True iff the non-units form an ideal."""
    return is_ideal(R, units(R).complement())
