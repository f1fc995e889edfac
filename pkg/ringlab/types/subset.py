"""
Bitmask-backed subsets of a finite ring's element indices.

A `Subset` is an immutable set of indices in [0, order) stored as a Python
int. It implies no closure property; ideals, multiplicative sets and element
classes are checked by the operations that produce them.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


class Subset:
    """An immutable set of element indices of a ring of fixed order."""

    __slots__ = ("order", "mask")

    def __init__(self, order: int, mask: int = 0):
        if mask < 0 or mask >> order:
            raise ValueError(f"mask has bits outside [0, {order})")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def of(cls, order: int, indices: Iterable[int]) -> "Subset":
        """Build from element indices."""
        mask = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < order:
                raise ValueError(f"element index {i} outside [0, {order})")
            mask |= 1 << i
        return cls(order, mask)

    @classmethod
    def from_bools(cls, flags: np.ndarray) -> "Subset":
        """Build from a boolean vector indexed by element."""
        return cls.of(len(flags), np.flatnonzero(flags))

    @classmethod
    def full(cls, order: int) -> "Subset":
        return cls(order, (1 << order) - 1)

    @classmethod
    def empty(cls, order: int) -> "Subset":
        return cls(order, 0)

    # --- set protocol ---

    def __contains__(self, i: object) -> bool:
        return isinstance(i, (int, np.integer)) and 0 <= int(i) < self.order and bool(self.mask >> int(i) & 1)

    def __iter__(self) -> Iterator[int]:
        mask, i = self.mask, 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.order == other.order and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.order, self.mask))

    def _check(self, other: "Subset") -> None:
        if self.order != other.order:
            raise ValueError("subsets of rings of different order")

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.order, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.order, self.mask & other.mask)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.order, self.mask & ~other.mask)

    def __le__(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    # mask-only, so reflected Ideal comparisons terminate
    def __lt__(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0 and self.mask != other.mask

    def __ge__(self, other: "Subset") -> bool:
        self._check(other)
        return other.mask & ~self.mask == 0

    def __gt__(self, other: "Subset") -> bool:
        self._check(other)
        return other.mask & ~self.mask == 0 and self.mask != other.mask

    def complement(self) -> "Subset":
        return Subset(self.order, ((1 << self.order) - 1) & ~self.mask)

    # --- conversions ---

    def indices(self) -> np.ndarray:
        """Members as a sorted int array."""
        return np.fromiter(iter(self), dtype=np.int64, count=len(self))

    def bools(self) -> np.ndarray:
        """Boolean membership vector of length `order`."""
        flags = np.zeros(self.order, dtype=bool)
        flags[self.indices()] = True
        return flags

    def image(self, element_map: np.ndarray, order: int) -> "Subset":
        """Image under an element map into a ring of the given order."""
        return Subset.of(order, np.unique(element_map[self.indices()]))

    def preimage(self, element_map: np.ndarray) -> "Subset":
        """Preimage under an element map defined on this ring's indices' source."""
        return Subset.from_bools(self.bools()[element_map])

    def least(self) -> int | None:
        """Smallest member or None when empty."""
        if not self.mask:
            return None
        return (self.mask & -self.mask).bit_length() - 1

    @property
    def sort_key(self) -> tuple[int, int]:
        """Canonical order: cardinality, then bitmask value."""
        return (len(self), self.mask)

    def render(self) -> str:
        """Sorted brace list, e.g. {1,3,5}."""
        return "{" + ",".join(str(i) for i in self) + "}"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()})"


class Ideal(Subset):
    """A subset verified to be a two-sided ideal of its ring."""

    __slots__ = ()


def sort_subsets(subsets: Iterable[Subset]) -> list:
    """Deduplicate and sort by (cardinality, bitmask)."""
    unique = {s.mask: s for s in subsets}
    return sorted(unique.values(), key=lambda s: s.sort_key)


def maximal_subsets(subsets: Iterable[Subset]) -> list:
    """The inclusion-maximal members, canonically sorted."""
    pool = sort_subsets(subsets)
    return [s for s in pool if not any(s < t for t in pool)]
