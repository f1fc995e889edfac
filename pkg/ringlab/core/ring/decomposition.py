"""
Central idempotent decomposition.

A finite ring is the internal direct product of its corner rings e_i R for
the primitive central idempotents e_i. Isomorphism with the product of the
factors is realized structurally through r -> (e_1 r, ..., e_s r).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

import numpy as np
import structlog

from ...config import config
from ...errors import InvariantViolation
from .constructors import product_ring
from .elements import central_idempotents, is_local
from .finite_ring import FiniteRing, ProductStructure, verify_homomorphism

logger = structlog.get_logger()


class Decomposition:
    """Primitive central idempotents, their corner rings and the projections r -> e_i r."""

    __slots__ = ("idempotents", "factors", "projections")

    def __init__(self, idempotents: list[int], factors: list[FiniteRing], projections: list[np.ndarray]):
        self.idempotents = tuple(idempotents)
        self.factors = tuple(factors)
        self.projections = tuple(projections)

    def __len__(self) -> int:
        return len(self.idempotents)

    @property
    def trivial(self) -> bool:
        return len(self.idempotents) == 1

    def factor_orders(self) -> list[int]:
        return [f.order for f in self.factors]

    def all_local(self) -> bool:
        return all(is_local(f) for f in self.factors)

    def as_structure(self) -> ProductStructure:
        return ProductStructure(self.factors, self.projections, source="idempotents")


def corner_ring(R: FiniteRing, e: int) -> tuple[FiniteRing, np.ndarray]:
    """The ring eR for a central idempotent e, with identity e, and the projection r -> er."""
    image = R.mul[e, :]
    members = np.unique(image)
    local_index = np.full(R.order, -1, dtype=np.int64)
    local_index[members] = np.arange(members.size)

    add = local_index[R.add[members[:, None], members[None, :]]]
    mul = local_index[R.mul[members[:, None], members[None, :]]]
    if (add < 0).any() or (mul < 0).any():
        raise InvariantViolation(f"corner ring at {e} is not closed", e)
    label = R.label if members.size == R.order else f"{R.label} [e={e}]"
    corner = FiniteRing(add, mul, int(local_index[e]), label=label)
    projection = local_index[image]
    verify_homomorphism(R, corner, projection, f"corner projection at {e}")
    return corner, projection


def primitive_central_idempotents(R: FiniteRing) -> list[int]:
    """Minimal nonzero central idempotents, ascending by index."""
    central = [e for e in central_idempotents(R) if e != 0]
    return [e for e in central if not any(f != e and R.mul[e, f] == f for f in central)]


@lru_cache(maxsize=256)
def central_idempotent_decomposition(R: FiniteRing) -> Decomposition:
    """The unique complete set of primitive central idempotents and the corner rings e_i R."""
    primitives = primitive_central_idempotents(R)
    factors, projections = [], []
    for e in primitives:
        corner, projection = corner_ring(R, e)
        factors.append(corner)
        projections.append(projection)
    decomposition = Decomposition(primitives, factors, projections)

    if config.checks.postconditions:
        _check_decomposition(R, decomposition)
    logger.debug("central_idempotent_decomposition", ring=R.label, idempotents=primitives)
    return decomposition


def _check_decomposition(R: FiniteRing, d: Decomposition) -> None:
    total = 0
    for i, e in enumerate(d.idempotents):
        total = int(R.add[total, e])
        for f in d.idempotents[i + 1:]:
            if R.mul[e, f] != 0:
                raise InvariantViolation("central idempotents not orthogonal", (e, f))
    if total != R.one:
        raise InvariantViolation("central idempotents do not sum to one", d.idempotents)
    if d.trivial:
        return

    P, coordinates = product_ring(d.factors, label=f"{R.label} (decomposed)")
    if P.order != R.order:
        raise InvariantViolation("decomposition changes the order", (P.order, R.order))
    radices = d.factor_orders()
    combined = np.zeros(R.order, dtype=np.int64)
    for proj, radix in zip(d.projections, radices):
        combined = combined * radix + proj
    if np.unique(combined).size != R.order:
        raise InvariantViolation("r -> (e_i r) is not bijective")
    verify_homomorphism(R, P, combined, "decomposition isomorphism")


def product_structure(R: FiniteRing) -> Optional[ProductStructure]:
    """Factors from the product constructor, else a non-trivial central decomposition, else None."""
    if R.structure is not None:
        return R.structure
    d = central_idempotent_decomposition(R)
    return None if d.trivial else d.as_structure()
