"""
Structured ring constructors.

Element indexing is canonical:
- Z/n uses residue = index.
- Matrix and triangular rings encode entries row-major with the base ring's
  indices as digits, entry (1,1) most significant; triangular rings keep
  only positions i <= j.
- Products use mixed radix with factor 1 most significant.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

import numpy as np
import structlog

from ...errors import InvalidTables
from ...monitoring.metrics import rings_constructed
from ...types.expr import Catalog, Matrix, Product, Quotient, RingExpr, Table, Triangular, Zmod
from .finite_ring import FiniteRing, ProductStructure, check_order_bound, verify_homomorphism
from .ideals import ideal_generated, quotient_ring

logger = structlog.get_logger()


def _decode(order: int, radices: Sequence[int]) -> np.ndarray:
    """Digits of every index in [0, order), most significant first. Shape (order, len(radices))."""
    digits = np.empty((order, len(radices)), dtype=np.int64)
    rest = np.arange(order)
    for pos in range(len(radices) - 1, -1, -1):
        digits[:, pos] = rest % radices[pos]
        rest = rest // radices[pos]
    return digits


def _encode(digits: np.ndarray, radices: Sequence[int]) -> np.ndarray:
    """Inverse of `_decode` along the last axis."""
    out = np.zeros(digits.shape[:-1], dtype=np.int64)
    for pos, radix in enumerate(radices):
        out = out * radix + digits[..., pos]
    return out


def zmod(n: int) -> FiniteRing:
    """Z/n with residue = index."""
    check_order_bound(n)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    rings_constructed.labels(kind="zmod").inc()
    return FiniteRing(add, mul, 1 % n, label=f"Z {n}")


def _digitwise(tables: Sequence[np.ndarray], digits: np.ndarray, radices: Sequence[int]) -> np.ndarray:
    """Componentwise operation on digit vectors, one table per digit position. Built row by row."""
    order = digits.shape[0]
    out = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        row = np.stack([t[digits[x, i], digits[:, i]] for i, t in enumerate(tables)], axis=-1)
        out[x] = _encode(row, radices)
    return out


def _matrix_tables(base: FiniteRing, k: int, positions: list[tuple[int, int]]) -> tuple[np.ndarray, np.ndarray, int]:
    """Tables of the ring of k x k matrices supported on `positions` (row-major)."""
    q = base.order
    radices = [q] * len(positions)
    order = q ** len(positions)
    check_order_bound(order)

    digits = _decode(order, radices)
    full = np.zeros((order, k, k), dtype=np.int64)
    rows = [i for i, _ in positions]
    cols = [j for _, j in positions]
    full[:, rows, cols] = digits

    add = _digitwise([base.add] * len(positions), digits, radices)

    mul = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        # terms[y, i, l, j] = A[i, l] * B_y[l, j]
        terms = base.mul[full[x][None, :, :, None], full[:, None, :, :]]
        acc = terms[:, :, 0, :]
        for l in range(1, k):
            acc = base.add[acc, terms[:, :, l, :]]
        mul[x] = _encode(acc[:, rows, cols], radices)

    identity = np.zeros((k, k), dtype=np.int64)
    identity[range(k), range(k)] = base.one
    one = int(_encode(identity[rows, cols], radices))
    return add, mul, one


def matrix(k: int, base: FiniteRing, label: str = "") -> FiniteRing:
    """Full matrix ring M_k(base)."""
    positions = [(i, j) for i in range(k) for j in range(k)]
    add, mul, one = _matrix_tables(base, k, positions)
    rings_constructed.labels(kind="matrix").inc()
    return FiniteRing(add, mul, one, label=label or f"M {k} ({base.label})")


def triangular(k: int, base: FiniteRing, label: str = "") -> FiniteRing:
    """Upper triangular matrices T_k(base)."""
    positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    add, mul, one = _matrix_tables(base, k, positions)
    rings_constructed.labels(kind="triangular").inc()
    return FiniteRing(add, mul, one, label=label or f"T {k} ({base.label})")


def product_ring(factors: Sequence[FiniteRing], label: str = "") -> tuple[FiniteRing, list[np.ndarray]]:
    """Direct product with componentwise tables and the coordinate projections."""
    if len(factors) < 2:
        raise ValueError("a product needs at least two factors")
    radices = [f.order for f in factors]
    order = prod(radices)
    check_order_bound(order)

    digits = _decode(order, radices)
    add = _digitwise([f.add for f in factors], digits, radices)
    mul = _digitwise([f.mul for f in factors], digits, radices)
    one = int(_encode(np.array([f.one for f in factors]), radices))

    projections = [digits[:, i].copy() for i in range(len(factors))]
    ring = FiniteRing(
        add,
        mul,
        one,
        label=label or "P (" + ", ".join(f.label for f in factors) + ")",
        structure=ProductStructure(factors, projections, source="product"),
    )
    for i, (factor, proj) in enumerate(zip(factors, projections)):
        verify_homomorphism(ring, factor, proj, f"projection onto factor {i + 1}")
    rings_constructed.labels(kind="product").inc()
    logger.debug("product_ring", order=order, factors=[f.label for f in factors])
    return ring, projections


def construct(expr: RingExpr, label: str = "") -> FiniteRing:
    """Build and validate the ring described by an expression tree."""
    if isinstance(expr, Zmod):
        ring = zmod(expr.n)
    elif isinstance(expr, Matrix):
        ring = matrix(expr.k, construct(expr.base))
    elif isinstance(expr, Triangular):
        ring = triangular(expr.k, construct(expr.base))
    elif isinstance(expr, Product):
        ring, _ = product_ring([construct(f) for f in expr.factors])
    elif isinstance(expr, Quotient):
        base = construct(expr.base)
        if any(g >= base.order for g in expr.generators):
            raise InvalidTables("quotient generator is not an element of the base ring", expr.generators)
        ideal = ideal_generated(base, expr.generators)
        ring, _ = quotient_ring(base, ideal)
        rings_constructed.labels(kind="quotient").inc()
    elif isinstance(expr, Table):
        check_order_bound(expr.order)
        ring = FiniteRing(np.array(expr.add), np.array(expr.mul), expr.one)
        rings_constructed.labels(kind="table").inc()
    elif isinstance(expr, Catalog):
        from ...ringspec.catalog import catalog_lookup

        return construct(catalog_lookup(expr.name), label=label or expr.name)
    else:
        raise TypeError(f"not a ring expression: {expr!r}")

    ring = ring.relabel(label or expr.render())
    logger.info("construct", ring=ring.label, order=ring.order)
    return ring
