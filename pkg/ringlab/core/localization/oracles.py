"""
Brute-force oracles for the localization engine.

- `exhaustive_denominator_sets` enumerates every multiplicatively closed set
  and filters the left denominator sets.
- `fraction_oracle` builds S^{-1}R from pairs (s, r) without using ass(S).

Both are bounded by `config.bounds` and meant for small rings.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import structlog

from ...config import config
from ...errors import InvalidTables, InvariantViolation, OracleBoundExceeded, ZeroAbsorbed
from ...monitoring.metrics import oracle_diffs
from ...types.checks import Check
from ...types.subset import Subset, maximal_subsets, sort_subsets
from ..ring.elements import units
from ..ring.finite_ring import FiniteRing
from .maxden import localize, max_denominator_sets
from .ore import ass_set, is_left_denominator, multiplicative_closure, require_denominator
from .records import OracleComparison

logger = structlog.get_logger()


def _check_oracle_order(R: FiniteRing) -> None:
    if R.order > config.bounds.oracle_max_order:
        raise OracleBoundExceeded(
            f"{R.label} has order {R.order} above the oracle bound {config.bounds.oracle_max_order}", R.order
        )


@lru_cache(maxsize=64)
def _closed_sets(R: FiniteRing) -> tuple[Subset, ...]:
    start = multiplicative_closure(R, [])
    seen = {start.mask: start}
    queue = [start]
    while queue:
        C = queue.pop()
        for x in C.complement():
            if x == 0:
                continue
            try:
                grown = multiplicative_closure(R, C | R.subset([x]))
            except ZeroAbsorbed:
                continue
            if grown.mask not in seen:
                seen[grown.mask] = grown
                queue.append(grown)
    return tuple(sort_subsets(seen.values()))


def exhaustive_denominator_sets(R: FiniteRing) -> list[Subset]:
    """Every left denominator set, sorted by (size, bitmask)."""
    _check_oracle_order(R)
    closed = _closed_sets(R)
    result = [S for S in closed if is_left_denominator(R, S)]
    logger.debug("exhaustive_denominator_sets", ring=R.label, closed=len(closed), denominator=len(result))
    return result


def maxden_oracle_diff(R: FiniteRing) -> list[Subset]:
    """Symmetric difference between the saturation-based and the exhaustive maximal sets."""
    exhaustive = {S.mask: S for S in maximal_subsets(exhaustive_denominator_sets(R))}
    saturated = {rec.S.mask: rec.S for rec in max_denominator_sets(R).records}
    diff = sort_subsets(
        [S for m, S in exhaustive.items() if m not in saturated] + [S for m, S in saturated.items() if m not in exhaustive]
    )
    if diff:
        oracle_diffs.labels(oracle="maxden").inc(len(diff))
        logger.warning("maxden_oracle_diff", ring=R.label, diff=[S.render() for S in diff])
    return diff


def check_regular_collapse(R: FiniteRing) -> Check:
    """Every denominator set with zero ass-ideal lies inside the units."""
    U = units(R)
    zero = Subset(R.order, 1)
    for S in exhaustive_denominator_sets(R):
        if ass_set(R, S) == zero and not S <= U:
            return Check.fail(S.render(), "denominator set with zero ass outside the units")
    return Check.ok()


class FractionRing:
    """Classes of pairs (s, r) standing for s^{-1} r, with ring tables on the classes."""

    def __init__(self, R: FiniteRing, S: Subset):
        self.R = R
        self.S = S
        self.s_values = S.indices()
        n = R.order
        self.s_index = np.full(n, -1, dtype=np.int64)
        self.s_index[self.s_values] = np.arange(self.s_values.size)

        # pair p = (s_values[p // n], p % n)
        pairs = np.arange(self.s_values.size * n)
        self.pair_s = self.s_values[pairs // n]
        self.pair_r = pairs % n

        self._ore_tables()
        self.pair_class, self.reps = self._classes()
        self.ring = self._tables()

    def pair(self, s, r):
        return self.s_index[s] * self.R.order + r

    def _ore_tables(self) -> None:
        """For x in R and s in S the least s1 in S (then least r1) with s1 x = r1 s."""
        R, n = self.R, self.R.order
        self.ore_s1 = np.full((n, self.s_values.size), -1, dtype=np.int64)
        self.ore_r1 = np.full((n, self.s_values.size), -1, dtype=np.int64)
        for j, s in enumerate(self.s_values):
            # least r1 with r1 s = v
            solver = np.full(n, -1, dtype=np.int64)
            for r1 in range(n - 1, -1, -1):
                solver[R.mul[r1, s]] = r1
            for x in range(n):
                products = R.mul[self.s_values, x]
                hits = np.flatnonzero(solver[products] >= 0)
                if hits.size == 0:
                    raise InvariantViolation("left Ore condition fails inside the fraction oracle", (x, int(s)))
                self.ore_s1[x, j] = self.s_values[hits[0]]
                self.ore_r1[x, j] = solver[products[hits[0]]]

    def _keys(self, p: int) -> frozenset:
        R, n = self.R, self.R.order
        s, r = self.pair_s[p], self.pair_r[p]
        cs = R.mul[:, s]
        cr = R.mul[:, r]
        inside = self.s_index[cs] >= 0
        return frozenset((cs[inside] * n + cr[inside]).tolist())

    def _classes(self) -> tuple[np.ndarray, list[int]]:
        count = self.pair_s.size
        parent = list(range(count))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        keys = [self._keys(p) for p in range(count)]
        owner: dict[int, int] = {}
        for p, ks in enumerate(keys):
            for k in ks:
                q = owner.setdefault(k, p)
                a, b = find(p), find(q)
                if a != b:
                    parent[max(a, b)] = min(a, b)

        members: dict[int, list[int]] = {}
        for p in range(count):
            members.setdefault(find(p), []).append(p)
        # the shared-key relation must already be transitive
        for group in members.values():
            for i, p in enumerate(group):
                for q in group[i + 1:]:
                    if not keys[p] & keys[q]:
                        raise InvariantViolation(
                            "fraction equivalence is not transitive",
                            ((int(self.pair_s[p]), int(self.pair_r[p])), (int(self.pair_s[q]), int(self.pair_r[q]))),
                        )

        reps = sorted(members)  # least member of each class
        index = {root: i for i, root in enumerate(reps)}
        pair_class = np.array([index[find(p)] for p in range(count)], dtype=np.int64)
        return pair_class, reps

    def add_pairs(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        R = self.R
        s, a = self.pair_s[p], self.pair_r[p]
        t, b = self.pair_s[q], self.pair_r[q]
        js = self.s_index[s]
        s1, r1 = self.ore_s1[t, js], self.ore_r1[t, js]
        # s1 t = r1 s
        return self.pair(R.mul[s1, t], R.add[R.mul[r1, a], R.mul[s1, b]])

    def mul_pairs(self, p: np.ndarray, q: np.ndarray) -> np.ndarray:
        R = self.R
        s, a = self.pair_s[p], self.pair_r[p]
        t, b = self.pair_s[q], self.pair_r[q]
        jt = self.s_index[t]
        t1, a1 = self.ore_s1[a, jt], self.ore_r1[a, jt]
        # t1 a = a1 t
        return self.pair(R.mul[t1, s], R.mul[a1, b])

    def _tables(self) -> FiniteRing:
        reps = np.array(self.reps, dtype=np.int64)
        k = reps.size
        p, q = reps[:, None], reps[None, :]
        add = self.pair_class[self.add_pairs(p, q)]
        mul = self.pair_class[self.mul_pairs(p, q)]

        everyone = np.arange(self.pair_s.size)
        for name, op, table in (("addition", self.add_pairs, add), ("multiplication", self.mul_pairs, mul)):
            left = self.pair_class[op(everyone[:, None], reps[None, :])]
            right = self.pair_class[op(reps[:, None], everyone[None, :])]
            ok_left = left == table[self.pair_class][:, :]
            ok_right = right == table[:, self.pair_class]
            if not (ok_left.all() and ok_right.all()):
                raise InvariantViolation(f"fraction {name} is not well defined", self.S.render())

        one = int(self.pair_class[self.pair(self.R.one, self.R.one)])
        try:
            return FiniteRing(add, mul, one, label=f"{self.R.label} [fractions {self.S.render()}]")
        except InvalidTables as exc:
            raise InvariantViolation(f"fraction construction is not a ring: {exc.axiom}", exc.witness) from exc


def _build(R: FiniteRing, S: Subset) -> FractionRing:
    require_denominator(R, S)
    pairs = len(S) * R.order
    if pairs > config.bounds.oracle_pair_limit:
        raise OracleBoundExceeded(f"|S x R| = {pairs} above the pair limit {config.bounds.oracle_pair_limit}", pairs)
    return FractionRing(R, S)


def fraction_oracle(R: FiniteRing, S: Subset) -> FiniteRing:
    """S^{-1}R as classes of pairs (s, r) under (s, r) ~ (s', r') iff cs = c's' in S and cr = c'r'."""
    return _build(R, S).ring


def check_fraction_oracle(R: FiniteRing, S: Subset) -> OracleComparison:
    """Compare the fraction ring with R/ass(S) through (s, r) -> pi(s)^{-1} pi(r)."""
    fractions = _build(R, S)
    view = localize(R, S)
    Q, proj = view.ring, view.den.projection

    inverse = np.full(Q.order, -1, dtype=np.int64)
    u, v = np.nonzero((Q.mul == Q.one) & (Q.mul == Q.one).T)
    inverse[u] = v
    image = Q.mul[inverse[proj[fractions.pair_s]], proj[fractions.pair_r]]

    reps = np.array(fractions.reps, dtype=np.int64)
    phi = image[reps]
    F = fractions.ring
    well_defined = bool((image == phi[fractions.pair_class]).all()) and bool((inverse[proj[fractions.s_values]] >= 0).all())
    bijective = F.order == Q.order and int(np.unique(phi).size) == Q.order
    additive = bool((phi[F.add] == Q.add[phi[:, None], phi[None, :]]).all())
    multiplicative = bool((phi[F.mul] == Q.mul[phi[:, None], phi[None, :]]).all())

    comparison = OracleComparison(
        ring=R.label,
        S=S,
        fraction_order=F.order,
        localization_order=Q.order,
        well_defined=well_defined,
        bijective=bijective,
        additive=additive,
        multiplicative=multiplicative,
    )
    if not comparison.agrees:
        oracle_diffs.labels(oracle="fraction").inc()
        logger.warning("fraction_oracle_mismatch", ring=R.label, S=S.render())
    return comparison
