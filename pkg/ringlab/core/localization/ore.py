"""
Ore and denominator conditions for multiplicative subsets.

For a multiplicative set S (1 in S, 0 not in S, closed under products):
- left Ore: Sr meets Rs for every r in R, s in S;
- ass(S) = {r : sr = 0 for some s in S};
- left denominator: left Ore and rs = 0 with s in S forces r in ass(S).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

import numpy as np
import structlog

from ...config import config
from ...errors import (
    InvariantViolation,
    NotDenominator,
    NotMultiplicative,
    NotOre,
    PrecondAssNotNested,
    ZeroAbsorbed,
)
from ...types.checks import Check
from ...types.subset import Ideal, Subset
from ..ring.elements import units
from ..ring.finite_ring import FiniteRing
from ..ring.ideals import is_ideal, quotient_ring

logger = structlog.get_logger()


def multiplicative_closure(R: FiniteRing, gens: Subset | Iterable[int]) -> Subset:
    """Smallest multiplicatively closed set containing gens and 1; ZeroAbsorbed if 0 is reached."""
    if not isinstance(gens, Subset):
        gens = R.subset(gens)
    return _closure(R, gens)


@lru_cache(maxsize=8192)
def _closure(R: FiniteRing, gens: Subset) -> Subset:
    # words[x]: a product of generators equal to x
    words: dict[int, tuple[int, ...]] = {R.one: ()}
    for g in gens:
        words.setdefault(g, (g,))
    if 0 in words:
        raise ZeroAbsorbed("zero is a generator", [0])

    members = list(words)
    queue = list(members)
    while queue:
        x = queue.pop(0)
        for y in list(members):
            for a, b in ((x, y), (y, x)):
                z = int(R.mul[a, b])
                if z == 0:
                    raise ZeroAbsorbed("zero in the multiplicative closure", list(words[a] + words[b]))
                if z not in words:
                    words[z] = words[a] + words[b]
                    members.append(z)
                    queue.append(z)
    return R.subset(members)


def multiplicative_check(R: FiniteRing, S: Subset) -> Check:
    if R.one not in S:
        return Check.fail(R.one, "1 not in S")
    if 0 in S:
        return Check.fail(0, "0 in S")
    members = S.indices()
    products = R.mul[members[:, None], members[None, :]]
    outside = ~S.bools()[products]
    if outside.any():
        i, j = np.argwhere(outside)[0]
        return Check.fail((int(members[i]), int(members[j])), "product leaves S")
    return Check.ok()


def require_multiplicative(R: FiniteRing, S: Subset) -> None:
    check = multiplicative_check(R, S)
    if not check:
        raise NotMultiplicative(f"{S.render()} is not a multiplicative set: {check.reason}", check.witness)


@lru_cache(maxsize=8192)
def is_left_ore(R: FiniteRing, S: Subset) -> Check:
    """Left Ore condition; the witness is the least failing pair (r, s)."""
    require_multiplicative(R, S)
    members = S.indices()
    fails = []
    for s in members:
        left_multiples = np.zeros(R.order, dtype=bool)
        left_multiples[R.mul[:, s]] = True  # Rs
        # Sr meets Rs, per r
        meets = left_multiples[R.mul[members, :]].any(axis=0)
        bad = np.flatnonzero(~meets)
        if bad.size:
            fails.append((int(bad[0]), int(s)))
    if fails:
        return Check.fail(min(fails), "Sr and Rs are disjoint")
    return Check.ok()


def _ass_flags(R: FiniteRing, S: Subset) -> np.ndarray:
    return (R.mul[S.indices(), :] == 0).any(axis=0)


@lru_cache(maxsize=8192)
def ass_set(R: FiniteRing, S: Subset) -> Subset:
    """{r : sr = 0 for some s in S}. An ideal whenever S is left Ore."""
    require_multiplicative(R, S)
    result = Subset.from_bools(_ass_flags(R, S))
    if is_left_ore(R, S):
        result = Ideal(result.order, result.mask)
        if config.checks.postconditions and not is_ideal(R, result):
            raise InvariantViolation("ass of a left Ore set is not an ideal", (S.render(), result.render()))
    return result


def right_ass_set(R: FiniteRing, X: Subset) -> Subset:
    """{r : rx = 0 for some x in X}."""
    return Subset.from_bools((R.mul[:, X.indices()] == 0).any(axis=1))


@lru_cache(maxsize=8192)
def is_left_denominator(R: FiniteRing, S: Subset) -> Check:
    """Left Ore plus: rs = 0 for s in S implies r in ass(S). Witness (r, s) on failure."""
    ore = is_left_ore(R, S)
    if not ore:
        return ore
    outside = right_ass_set(R, S) - ass_set(R, S)
    if outside:
        r = outside.least()
        s = next(int(s) for s in S if R.mul[r, s] == 0)
        return Check.fail((r, s), "rs = 0 but r not in ass(S)")
    return Check.ok()


def require_denominator(R: FiniteRing, S: Subset) -> None:
    check = is_left_denominator(R, S)
    if not check:
        raise NotDenominator(f"{S.render()} is not a left denominator set: {check.reason}", check.witness)


@lru_cache(maxsize=4096)
def saturate(R: FiniteRing, I: Subset) -> Subset:
    """Preimage of the units of R/I."""
    Q, projection = quotient_ring(R, I)
    return units(Q).preimage(projection)


@lru_cache(maxsize=4096)
def is_localizable_ideal(R: FiniteRing, I: Subset) -> bool:
    """I is the ass-ideal of some left denominator set; tested on its saturation."""
    S = saturate(R, I)
    return bool(is_left_denominator(R, S)) and ass_set(R, S) == I


def core(R: FiniteRing, S: Subset) -> Subset:
    """{s in S : ker(s.) = ass(S)} with exact equality."""
    ore = is_left_ore(R, S)
    if not ore:
        raise NotOre(f"{S.render()} is not a left Ore set", ore.witness)
    ass = ass_set(R, S).bools()
    kernels = R.mul[S.indices(), :] == 0
    exact = (kernels == ass[None, :]).all(axis=1)
    return R.subset(S.indices()[exact])


def denominator_join(R: FiniteRing, S: Subset, T: Subset) -> Subset:
    """Multiplicative closure of S and T for denominator sets with ass(S) inside ass(T)."""
    require_denominator(R, S)
    require_denominator(R, T)
    ass_T = ass_set(R, T)
    if not ass_set(R, S) <= ass_T:
        raise PrecondAssNotNested(
            f"ass({S.render()}) is not inside ass({T.render()})", (ass_set(R, S) - ass_T).least()
        )
    try:
        joined = multiplicative_closure(R, S | T)
    except ZeroAbsorbed as exc:
        raise InvariantViolation("zero absorbed joining nested denominator sets", exc.witness) from exc

    if config.checks.postconditions:
        if not right_ass_set(R, joined) <= ass_T:
            raise InvariantViolation("r.ass(ST) not inside ass(T)", joined.render())
        if not is_left_denominator(R, joined):
            raise InvariantViolation("ST is not a left denominator set", joined.render())
        if not ass_T <= ass_set(R, joined):
            raise InvariantViolation("ass(ST) does not contain ass(T)", joined.render())
    return joined
