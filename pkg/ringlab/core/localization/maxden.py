"""
Maximal left denominator sets via localizable ideals.

The maximal denominator sets correspond to the inclusion-maximal localizable
ideals; each is the saturation of its ass-ideal. Localizations of a finite
ring are realized as R/ass(S).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

import numpy as np
import structlog

from ...config import config
from ...errors import InvariantViolation
from ...monitoring.metrics import maxden_count
from ...types.checks import Check
from ...types.subset import Ideal, Subset, maximal_subsets, sort_subsets
from ..ring.elements import units
from ..ring.finite_ring import FiniteRing
from ..ring.ideals import enumerate_ideals, quotient_ring
from .ore import ass_set, core, is_left_denominator, is_left_ore, is_localizable_ideal, require_denominator, saturate
from .records import DenRecord, LocView, MaxDenProfile, PhiImage, PhiMap

logger = structlog.get_logger()


def _record(R: FiniteRing, S: Subset, ass: Subset) -> DenRecord:
    Q, projection = quotient_ring(R, ass)
    record = DenRecord(
        S=S,
        ass=Ideal(ass.order, ass.mask),
        core=core(R, S),
        quotient=Q,
        projection=projection,
        saturated=S == saturate(R, ass),
    )
    if config.checks.postconditions and not S.image(projection, Q.order) <= units(Q):
        raise InvariantViolation("S does not map into the units of R/ass(S)", S.render())
    return record


@lru_cache(maxsize=256)
def _localizable_ideals(R: FiniteRing) -> tuple[Ideal, ...]:
    return tuple(I for I in enumerate_ideals(R) if R.one not in I and is_localizable_ideal(R, I))


def localizable_ideals(R: FiniteRing) -> list[Ideal]:
    """Every ideal that is the ass-ideal of a left denominator set, sorted by (size, bitmask)."""
    return list(_localizable_ideals(R))


@lru_cache(maxsize=256)
def max_denominator_sets(R: FiniteRing) -> MaxDenProfile:
    """Saturations of the maximal localizable ideals, sorted by ass bitmask."""
    localizable = localizable_ideals(R)
    maximal = sorted(maximal_subsets(localizable), key=lambda I: I.mask)
    records = [_record(R, saturate(R, I), I) for I in maximal]

    ll = Subset.full(R.order)
    union = Subset.empty(R.order)
    intersection = Subset.full(R.order)
    for record in records:
        ll = ll & record.ass
        union = union | record.S
        intersection = intersection & record.S

    profile = MaxDenProfile(
        ring=R,
        records=records,
        ll_radical=Ideal(ll.order, ll.mask),
        localizable=union,
        completely_localizable=intersection,
        localizable_ideals=localizable,
    )
    if config.checks.postconditions:
        _check_profile(R, profile)
    maxden_count.labels(ring=R.label).set(len(records))
    logger.info("max_denominator_sets", ring=R.label, count=len(records), ll=ll.render())
    return profile


def _check_profile(R: FiniteRing, profile: MaxDenProfile) -> None:
    asses = profile.ass_ideals
    for i, a in enumerate(asses):
        for b in asses[i + 1:]:
            if a <= b or b <= a:
                raise InvariantViolation("maximal ass-ideals are comparable", (a.render(), b.render()))
    # ll is the kernel of R -> prod R/ass(S)
    kernel = np.ones(R.order, dtype=bool)
    for record in profile.records:
        kernel &= record.projection == 0
    if Subset.from_bools(kernel) != profile.ll_radical:
        raise InvariantViolation("ll radical is not the kernel of the combined projection", profile.ll_radical.render())
    U = units(R)
    for record in profile.records:
        if not U <= record.S:
            raise InvariantViolation("units outside a maximal denominator set", record.S.render())


def ll_radical(R: FiniteRing) -> Ideal:
    """Intersection of the ass-ideals of the maximal denominator sets."""
    return max_denominator_sets(R).ll_radical


def localize(R: FiniteRing, S: Subset) -> LocView:
    """S^{-1}R as R/ass(S) with the projection."""
    require_denominator(R, S)
    return LocView(source=R, den=_record(R, S, ass_set(R, S)))


def is_left_localizable_element(R: FiniteRing, r: int) -> bool:
    return r in max_denominator_sets(R).localizable


def non_localizable_elements(R: FiniteRing) -> Subset:
    return max_denominator_sets(R).localizable.complement()


def largest_regular_denominator_set(R: FiniteRing) -> Subset:
    """The largest denominator set with zero ass-ideal, which for a finite ring is the unit group."""
    U = units(R)
    if config.checks.postconditions:
        if not is_left_denominator(R, U) or ass_set(R, U) != Subset(R.order, 1):
            raise InvariantViolation("units are not a denominator set with zero ass", U.render())
        for record in max_denominator_sets(R).records:
            if not U <= record.S:
                raise InvariantViolation("units outside a maximal denominator set", record.S.render())
    return U


def _core_or_none(R: FiniteRing, S: Subset) -> Optional[Subset]:
    return core(R, S) if is_left_ore(R, S) else None


@lru_cache(maxsize=256)
def phi_map(R: FiniteRing) -> PhiMap:
    """S -> pi'(S) from maxDen(R) to maxDen(R/ll)."""
    profile = max_denominator_sets(R)
    Rp, proj = quotient_ring(R, profile.ll_radical)
    target_profile = max_denominator_sets(Rp)
    target = [record.S for record in target_profile.records]

    images = []
    for record in profile.records:
        image = record.S.image(proj, Rp.order)
        denominator: Check = is_left_denominator(Rp, image) if 0 not in image else Check.fail(0)
        image_ass = ass_set(Rp, image) if denominator else Subset.empty(Rp.order)
        image_core = _core_or_none(Rp, image) if denominator else None
        images.append(
            PhiImage(
                source=record.S,
                image=image,
                image_ass=Ideal(image_ass.order, image_ass.mask),
                denominator=bool(denominator),
                ass_matches=bool(denominator) and image_ass == record.ass.image(proj, Rp.order),
                maximal=image in target,
                core_projects=image_core is not None and record.core.image(proj, Rp.order) <= image_core,
            )
        )

    image_sets = [i.image for i in images]
    injective = len(set(image_sets)) == len(image_sets)
    surjective = set(image_sets) == set(target)

    C = profile.completely_localizable
    Cp = target_profile.completely_localizable
    preimage = Cp.preimage(proj)
    transfer = None
    if surjective:
        transfer = preimage == C and C.image(proj, Rp.order) == Cp

    phi = PhiMap(
        quotient=Rp,
        projection=proj,
        images=images,
        target=sort_subsets(target),
        injective=injective,
        surjective=surjective,
        regular_preimage_inside=preimage <= C,
        regular_transfer=transfer,
    )
    if config.checks.postconditions:
        for item in images:
            if not (item.denominator and item.maximal):
                raise InvariantViolation("pi'(S) is not a maximal denominator set of R/ll", item.source.render())
        if not injective:
            raise InvariantViolation("phi is not injective", [s.render() for s in image_sets])
    logger.debug("phi_map", ring=R.label, injective=injective, surjective=surjective)
    return phi
