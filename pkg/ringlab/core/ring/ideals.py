"""
Two-sided ideals: membership checks, generation, enumeration and quotients.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np
import structlog

from ...config import config
from ...errors import IdealBoundExceeded, ImproperIdeal, InvariantViolation
from ...monitoring.metrics import ideals_enumerated
from ...types.subset import Ideal, Subset, sort_subsets
from .finite_ring import FiniteRing, verify_homomorphism

logger = structlog.get_logger()


def is_ideal(R: FiniteRing, X: Subset) -> bool:
    """True iff X contains 0 and is closed under addition and two-sided multiplication."""
    if 0 not in X:
        return False
    members = X.indices()
    flags = X.bools()
    return bool(
        flags[R.add[members[:, None], members[None, :]]].all()
        and flags[R.mul[:, members]].all()
        and flags[R.mul[members, :]].all()
    )


def _additive_closure(R: FiniteRing, flags: np.ndarray) -> np.ndarray:
    flags = flags.copy()
    flags[0] = True
    while True:
        members = np.flatnonzero(flags)
        grown = flags.copy()
        grown[R.add[members[:, None], members[None, :]]] = True
        if (grown == flags).all():
            return flags
        flags = grown


def ideal_generated(R: FiniteRing, generators: Iterable[int]) -> Ideal:
    """Smallest two-sided ideal containing the generators."""
    gens = np.array(sorted({int(g) for g in generators}), dtype=np.int64)
    if gens.size and (gens.min() < 0 or gens.max() >= R.order):
        raise ValueError(f"generator outside [0, {R.order})")
    flags = np.zeros(R.order, dtype=bool)
    if gens.size:
        # a g b over all a, b
        left = R.mul[:, gens]
        flags[R.mul[left[:, :, None], np.arange(R.order)[None, None, :]]] = True
    return Ideal.from_bools(_additive_closure(R, flags))


def ideal_sum(R: FiniteRing, I: Subset, J: Subset) -> Ideal:
    flags = np.zeros(R.order, dtype=bool)
    flags[R.add[I.indices()[:, None], J.indices()[None, :]]] = True
    return Ideal.from_bools(flags)


def principal_ideal(R: FiniteRing, x: int) -> Ideal:
    return ideal_generated(R, [x])


@lru_cache(maxsize=256)
def _enumerate_ideals(R: FiniteRing) -> tuple[Ideal, ...]:
    found: dict[int, Ideal] = {0: Ideal(R.order, 1)}
    for x in range(R.order):
        I = principal_ideal(R, x)
        found.setdefault(I.mask, I)

    queue = list(found.values())
    while queue:
        I = queue.pop()
        for J in list(found.values()):
            K = ideal_sum(R, I, J)
            if K.mask not in found:
                found[K.mask] = K
                queue.append(K)
                if len(found) > config.bounds.max_ideals:
                    raise IdealBoundExceeded(
                        f"more than {config.bounds.max_ideals} ideals in {R.label}", len(found)
                    )

    ideals = tuple(sort_subsets(found.values()))
    ideals_enumerated.inc(len(ideals))
    logger.debug("enumerate_ideals", ring=R.label, count=len(ideals))
    return ideals


def enumerate_ideals(R: FiniteRing) -> list[Ideal]:
    """All two-sided ideals sorted by (size, bitmask); sum-closure of the principal ideals."""
    ideals = list(_enumerate_ideals(R))
    if len(ideals) > config.bounds.max_ideals:
        raise IdealBoundExceeded(f"more than {config.bounds.max_ideals} ideals in {R.label}", len(ideals))
    return ideals


def check_ideal_lattice(R: FiniteRing, ideals: list[Ideal]) -> None:
    """Raise InvariantViolation unless the list is closed under sum and intersection."""
    masks = {I.mask for I in ideals}
    for I in ideals:
        for J in ideals:
            if ideal_sum(R, I, J).mask not in masks:
                raise InvariantViolation("ideal list not closed under sum", (I.render(), J.render()))
            if (I & J).mask not in masks:
                raise InvariantViolation("ideal list not closed under intersection", (I.render(), J.render()))


@lru_cache(maxsize=1024)
def quotient_ring(R: FiniteRing, I: Subset) -> tuple[FiniteRing, np.ndarray]:
    """R/I with each coset represented by its smallest index, plus the projection R -> R/I."""
    if R.one in I:
        raise ImproperIdeal(f"ideal {I.render()} contains one", R.one)
    if config.checks.postconditions and not is_ideal(R, I):
        raise InvariantViolation("quotient by a subset that is not an ideal", I.render())

    members = I.indices()
    representative = R.add[:, members].min(axis=1)
    reps = np.unique(representative)
    projection = np.searchsorted(reps, representative)
    projection.setflags(write=False)

    add = projection[R.add[reps[:, None], reps[None, :]]]
    mul = projection[R.mul[reps[:, None], reps[None, :]]]
    label = R.label if len(I) == 1 else f"{R.label} / {I.render()}"
    Q = FiniteRing(add, mul, int(projection[R.one]), label=label)

    verify_homomorphism(R, Q, projection, "quotient projection")
    return Q, projection
