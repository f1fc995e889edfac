"""
Finite unital rings given by addition and multiplication tables.

Elements are indices in [0, n); index 0 is always zero. Tables are numpy
arrays frozen after validation, so a `FiniteRing` is immutable and safe to
share and cache by identity.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np
import structlog

from ...config import config
from ...errors import InvalidTables, InvariantViolation, OrderBoundExceeded
from ...types.subset import Subset

logger = structlog.get_logger()


def _frozen(table: np.ndarray) -> np.ndarray:
    out = np.array(table, dtype=np.int64, copy=True)
    out.setflags(write=False)
    return out


def _first_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[tuple]:
    bad = np.argwhere(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(x) for x in bad[0])


def _triples(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All triples (broadcast grids) up to the exhaustive order, seeded samples above it."""
    if n <= config.checks.exhaustive_axiom_order:
        idx = np.arange(n)
        return idx[:, None, None], idx[None, :, None], idx[None, None, :]
    rng = np.random.default_rng(config.checks.seed)
    a, b, c = rng.integers(0, n, size=(3, config.checks.axiom_samples))
    return a, b, c


def check_ring_axioms(add: np.ndarray, mul: np.ndarray, one: int) -> None:
    """Raise InvalidTables with the failing triple if (add, mul, 0, one) is not a unital ring."""
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise InvalidTables("tables must be square and of equal size", (add.shape, mul.shape))
    if n < 2:
        raise InvalidTables("order must be at least 2 (zero ring rejected)", n)
    for name, table in (("add", add), ("mul", mul)):
        if table.min() < 0 or table.max() >= n:
            raise InvalidTables(f"{name} table entry outside [0, {n})")
    if not 0 <= one < n or one == 0:
        raise InvalidTables("one must be a nonzero element index", one)

    idx = np.arange(n)
    if (w := _first_mismatch(add[0, :], idx)) is not None:
        raise InvalidTables("0 is an additive identity", (0, w[0]))
    if (w := _first_mismatch(add, add.T)) is not None:
        raise InvalidTables("addition is commutative", w)
    if not (add == 0).any(axis=1).all():
        raise InvalidTables("every element has an additive inverse", int(np.flatnonzero(~(add == 0).any(axis=1))[0]))
    if (w := _first_mismatch(mul[one, :], idx)) is not None:
        raise InvalidTables("one is a left identity", (one, w[0]))
    if (w := _first_mismatch(mul[:, one], idx)) is not None:
        raise InvalidTables("one is a right identity", (w[0], one))

    a, b, c = _triples(n)
    checks = (
        ("addition is associative", add[add[a, b], c], add[a, add[b, c]]),
        ("multiplication is associative", mul[mul[a, b], c], mul[a, mul[b, c]]),
        ("left distributivity a(b+c) = ab+ac", mul[a, add[b, c]], add[mul[a, b], mul[a, c]]),
        ("right distributivity (a+b)c = ac+bc", mul[add[a, b], c], add[mul[a, c], mul[b, c]]),
    )
    for axiom, lhs, rhs in checks:
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            pos = tuple(bad[0])
            triple = tuple(int(np.broadcast_to(x, lhs.shape)[pos]) for x in (a, b, c))
            raise InvalidTables(axiom, triple)


def check_order_bound(order: int) -> None:
    if order > config.bounds.max_order:
        raise OrderBoundExceeded(f"ring order {order} exceeds bound {config.bounds.max_order}", order)


class FiniteRing:
    """An order-n unital ring given by tables, with zero fixed at index 0."""

    __slots__ = ("order", "add", "mul", "neg", "one", "label", "structure", "__weakref__")

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        one: int,
        label: str = "",
        structure: Optional["ProductStructure"] = None,
        validate: bool = True,
    ):
        add = _frozen(add)
        mul = _frozen(mul)
        check_order_bound(add.shape[0])
        if validate:
            check_ring_axioms(add, mul, one)
        object.__setattr__(self, "order", int(add.shape[0]))
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "one", int(one))
        object.__setattr__(self, "label", label or f"ring[{add.shape[0]}]")
        object.__setattr__(self, "neg", _frozen(np.argmax(add == 0, axis=1)))
        object.__setattr__(self, "structure", structure)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteRing is immutable")

    def __repr__(self) -> str:
        return f"FiniteRing(label={self.label!r}, order={self.order})"

    # --- element helpers ---

    @property
    def zero(self) -> int:
        return 0

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order)

    def sub(self, a, b):
        """a - b, elementwise on arrays."""
        return self.add[a, self.neg[b]]

    def power(self, r: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, r])
        return result

    def subset(self, indices) -> Subset:
        return Subset.of(self.order, indices)

    def full(self) -> Subset:
        return Subset.full(self.order)

    def same_tables(self, other: "FiniteRing") -> bool:
        return (
            self.order == other.order
            and self.one == other.one
            and bool(np.array_equal(self.add, other.add))
            and bool(np.array_equal(self.mul, other.mul))
        )

    def relabel(self, label: str) -> "FiniteRing":
        return FiniteRing(self.add, self.mul, self.one, label, self.structure, validate=False)


class ProductStructure:
    """Factor rings of a direct product with their coordinate projections R -> R_i."""

    __slots__ = ("factors", "projections", "source")

    def __init__(self, factors: Sequence[FiniteRing], projections: Sequence[np.ndarray], source: str):
        self.factors = tuple(factors)
        self.projections = tuple(_frozen(p) for p in projections)
        # "product" (constructor) or "idempotents" (central decomposition)
        self.source = source

    def __len__(self) -> int:
        return len(self.factors)


def verify_homomorphism(source: FiniteRing, target: FiniteRing, element_map: np.ndarray, what: str) -> None:
    """Raise InvariantViolation unless element_map is a unital ring homomorphism."""
    if not config.checks.postconditions:
        return
    f = element_map
    if f[source.one] != target.one:
        raise InvariantViolation(f"{what}: does not preserve one")
    for op, src, dst in (("addition", source.add, target.add), ("multiplication", source.mul, target.mul)):
        bad = np.argwhere(f[src] != dst[f[:, None], f[None, :]])
        if bad.size:
            raise InvariantViolation(f"{what}: does not preserve {op}", tuple(int(x) for x in bad[0]))
