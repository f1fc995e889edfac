"""
Registry of mechanized theorem checks.

Each entry evaluates one statement on a finite ring. Equivalence entries
compute both sides independently; formula entries evaluate a list of
sub-statements under their hypotheses and set lhs = rhs = "all hold".
"""

from __future__ import annotations

from typing import Callable, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..config import config
from ..core.classify.predicates import (
    is_left_localizable_ring,
    is_left_localization_maximal,
    is_weakly_left_localizable,
)
from ..core.localization.maxden import localizable_ideals, ll_radical, localize, max_denominator_sets, phi_map
from ..core.localization.oracles import exhaustive_denominator_sets
from ..core.localization.ore import ass_set, is_left_denominator
from ..core.ring.decomposition import central_idempotent_decomposition, product_structure
from ..core.ring.elements import (
    is_local,
    is_nil,
    jacobson_radical,
    left_regular_elements,
    nil_radical,
    nilpotent_elements,
    right_regular_elements,
    units,
)
from ..core.ring.finite_ring import FiniteRing
from ..core.ring.ideals import is_ideal, quotient_ring
from ..types.report import Condition, Witness
from ..types.subset import Subset, maximal_subsets
from .facts import (
    decomposes_into_local_nil_rad,
    decomposes_into_locals,
    factor_unit_preimages,
    factor_zero_preimages,
    is_finite_field,
    local_with_nil_radical,
    localizations_wll,
    pairwise_not_nil_modulo,
)


class Evidence:
    """Collects named sub-conditions and witnesses while a check runs."""

    def __init__(self):
        self.conditions: list[Condition] = []
        self.witnesses: list[Witness] = []

    def check(self, name: str, value, witness=None) -> bool:
        value = bool(value)
        self.conditions.append(Condition(name=name, value=value))
        if not value and witness is not None:
            self.witnesses.append(Witness(condition=name, value=str(witness)))
        return value

    def note(self, name: str, witness) -> None:
        self.witnesses.append(Witness(condition=name, value=str(witness)))

    def statements_hold(self) -> bool:
        """All recorded conditions except hypotheses."""
        return all(c.value for c in self.conditions if not c.name.startswith("hyp."))


# check(R, evidence) -> (applicable, lhs, rhs)
CheckFn = Callable[[FiniteRing, Evidence], tuple[bool, bool, bool]]


class TheoremEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    description: str
    kind: Literal["equivalence", "formula"]
    has_hypotheses: bool
    check: CheckFn


REGISTRY: dict[str, TheoremEntry] = {}


def theorem(id: str, description: str, kind: Literal["equivalence", "formula"], has_hypotheses: bool = False):
    """Register a check under a stable id; registration order is registry order."""

    def register(fn: CheckFn) -> CheckFn:
        REGISTRY[id] = TheoremEntry(id=id, description=description, kind=kind, has_hypotheses=has_hypotheses, check=fn)
        return fn

    return register


def _formula(ev: Evidence, applicable: bool) -> tuple[bool, bool, bool]:
    holds = ev.statements_hold() if applicable else True
    return applicable, holds, holds


def _conditions_26mar14(R: FiniteRing, ev: Evidence, prefix: str) -> bool:
    wll = is_weakly_left_localizable(R)
    ll = ll_radical(R)
    results = [
        ev.check(f"{prefix}.wll", wll, wll.witness),
        ev.check(f"{prefix}.ll_zero", len(ll) == 1, ll.render()),
        ev.check(f"{prefix}.maxden_finite", len(max_denominator_sets(R)) > 0),
        ev.check(f"{prefix}.localizations_wll", *localizations_wll(R)),
        ev.check(f"{prefix}.ass_not_nil_modulo", *pairwise_not_nil_modulo(R)),
    ]
    return all(results)


def _conditions_28mar14(R: FiniteRing, ev: Evidence, prefix: str) -> bool:
    wll = is_weakly_left_localizable(R)
    phi = phi_map(R)
    results = [
        ev.check(f"{prefix}.wll", wll, wll.witness),
        ev.check(f"{prefix}.phi_surjective", phi.surjective, [s.render() for s in phi.target]),
        ev.check(f"{prefix}.maxden_finite", len(max_denominator_sets(R)) > 0),
        ev.check(f"{prefix}.localizations_wll", *localizations_wll(R)),
        ev.check(f"{prefix}.ass_not_nil_modulo", *pairwise_not_nil_modulo(R)),
    ]
    return all(results)


def _ll_quotient(R: FiniteRing):
    return quotient_ring(R, ll_radical(R))


@theorem(
    "thm-26Mar14",
    "R is WLL with ll = 0, every maximal localization WLL and no ass nil modulo another iff "
    "R is a product of local rings with rad = nil radical",
    "equivalence",
)
def _thm_26mar14(R, ev):
    lhs = _conditions_26mar14(R, ev, "lhs")
    rhs = ev.check("rhs.local_nil_rad_factors", decomposes_into_local_nil_rad(R))
    return True, lhs, rhs


@theorem(
    "thm-28Mar14",
    "R is WLL with phi onto, every maximal localization WLL and no ass nil modulo another iff "
    "R/ll is a product of local rings with rad = nil radical, ll is nil and pi'(L(R)) = L(R/ll)",
    "equivalence",
)
def _thm_28mar14(R, ev):
    lhs = _conditions_28mar14(R, ev, "lhs")
    Rp, proj = _ll_quotient(R)
    ll = ll_radical(R)
    L, Lp = max_denominator_sets(R).localizable, max_denominator_sets(Rp).localizable
    rhs = all(
        [
            ev.check("rhs.quotient_local_nil_rad_factors", decomposes_into_local_nil_rad(Rp)),
            ev.check("rhs.ll_nil", is_nil(R, ll), (ll - nilpotent_elements(R)).least()),
            ev.check("rhs.localizable_projects_onto", L.image(proj, Rp.order) == Lp),
        ]
    )
    return True, lhs, rhs


@theorem(
    "cor-b26Mar14",
    "for a product of local rings with rad = nil radical: maxDen are the unit-coordinate sets, "
    "regular = completely localizable, Nil = nil radical = rad",
    "formula",
    has_hypotheses=True,
)
def _cor_b26mar14(R, ev):
    applicable = ev.check("hyp.local_nil_rad_factors", decomposes_into_local_nil_rad(R))
    if applicable:
        profile = max_denominator_sets(R)
        found = {r.S for r in profile.records}
        expected = set(factor_unit_preimages(R))
        ev.check("maxden_unit_preimages", found == expected, sorted(s.render() for s in found ^ expected))
        regular = left_regular_elements(R) & right_regular_elements(R)
        ev.check("regular_equals_completely_localizable", regular == profile.completely_localizable,
                 profile.completely_localizable.render())
        ev.check("nil_equals_nil_radical", nilpotent_elements(R) == nil_radical(R), nilpotent_elements(R).render())
        ev.check("nil_radical_equals_rad", nil_radical(R) == jacobson_radical(R), jacobson_radical(R).render())
    return _formula(ev, applicable)


@theorem(
    "thm-24Dec12",
    "a semilocal ring is WLL with rad = nil radical iff it is a product of local rings with rad = nil radical",
    "equivalence",
)
def _thm_24dec12(R, ev):
    # every finite ring is semilocal
    ev.check("hyp.semilocal", True)
    wll = is_weakly_left_localizable(R)
    lhs = all(
        [
            ev.check("lhs.wll", wll, wll.witness),
            ev.check("lhs.rad_equals_nil_radical", jacobson_radical(R) == nil_radical(R), jacobson_radical(R).render()),
        ]
    )
    rhs = ev.check("rhs.local_nil_rad_factors", decomposes_into_local_nil_rad(R))
    return True, lhs, rhs


@theorem(
    "cor-a24Dec12",
    "a left Artinian ring is WLL iff it is a product of local left Artinian rings",
    "equivalence",
)
def _cor_a24dec12(R, ev):
    ev.check("hyp.left_artinian", True)
    wll = is_weakly_left_localizable(R)
    lhs = ev.check("lhs.wll", wll, wll.witness)
    rhs = ev.check("rhs.local_factors", decomposes_into_locals(R))
    return True, lhs, rhs


@theorem(
    "cor-b24Dec12",
    "for a WLL ring with rad = nil radical: maxDen, ass and cores are coordinate sets "
    "and {1, e_i} is a denominator set with ass(S_i)",
    "formula",
    has_hypotheses=True,
)
def _cor_b24dec12(R, ev):
    wll = is_weakly_left_localizable(R)
    applicable = all(
        [
            ev.check("hyp.wll", wll),
            ev.check("hyp.rad_equals_nil_radical", jacobson_radical(R) == nil_radical(R)),
        ]
    )
    if applicable:
        d = central_idempotent_decomposition(R)
        records = {r.S: r for r in max_denominator_sets(R).records}
        unit_pre = factor_unit_preimages(R)
        zero_pre = factor_zero_preimages(R)
        ev.check("maxden_count", len(records) == len(d), len(records))
        for i, (e, S_i) in enumerate(zip(d.idempotents, unit_pre)):
            record = records.get(S_i)
            if not ev.check(f"maxden[{e}]", record is not None, S_i.render()):
                continue
            ev.check(f"ass[{e}]", record.ass == zero_pre[i], record.ass.render())
            ev.check(f"localization_order[{e}]", record.quotient.order == d.factors[i].order, record.quotient.order)
            expected_core = S_i
            for j, Z in enumerate(zero_pre):
                if j != i:
                    expected_core = expected_core & Z
            ev.check(f"core[{e}]", record.core == expected_core, record.core.render())
            E = R.subset([R.one, e])
            ev.check(f"idempotent_denominator[{e}]", is_left_denominator(R, E) and ass_set(R, E) == record.ass, E.render())
        ev.check("nil_equals_nil_radical", nilpotent_elements(R) == nil_radical(R))
    return _formula(ev, applicable)


@theorem(
    "thm-C2Dec12",
    "under the conditions of thm-26Mar14: S_c = S = R minus the nil radical for one maximal set, "
    "S_i,c = S_i meet the other ass-ideals, non-empty, for several",
    "formula",
    has_hypotheses=True,
)
def _thm_c2dec12(R, ev):
    applicable = _conditions_26mar14(R, ev, "hyp")
    if applicable:
        records = max_denominator_sets(R).records
        if len(records) == 1:
            (record,) = records
            complement = nil_radical(R).complement()
            ev.check("core_equals_S", record.core == record.S, record.core.render())
            ev.check("S_equals_complement_of_nil_radical", record.S == complement, record.S.render())
        else:
            for i, record in enumerate(records):
                expected = record.S
                for j, other in enumerate(records):
                    if j != i:
                        expected = expected & other.ass
                ev.check(f"core[{i + 1}]", record.core == expected, record.core.render())
                ev.check(f"core_nonempty[{i + 1}]", bool(record.core), record.S.render())
    return _formula(ev, applicable)


@theorem(
    "thm-9Feb13",
    "a direct product is WLL iff every factor is WLL",
    "equivalence",
    has_hypotheses=True,
)
def _thm_9feb13(R, ev):
    structure = product_structure(R)
    applicable = ev.check("hyp.product", structure is not None)
    wll = is_weakly_left_localizable(R)
    lhs = ev.check("lhs.wll", wll, wll.witness)
    if not applicable:
        return False, lhs, lhs
    rhs = True
    for i, F in enumerate(structure.factors):
        factor = is_weakly_left_localizable(F)
        rhs = ev.check(f"rhs.factor_wll[{i + 1}]", factor, factor.witness) and rhs
    return True, lhs, rhs


@theorem(
    "thm-c26Dec12",
    "maxDen of a product is the tagged disjoint union of the factors' maxDen, with ass and core shapes",
    "formula",
    has_hypotheses=True,
)
def _thm_c26dec12(R, ev):
    structure = product_structure(R)
    applicable = ev.check("hyp.product", structure is not None)
    if applicable:
        found = {r.S: r for r in max_denominator_sets(R).records}
        zero = [Subset(F.order, 1).preimage(p) for F, p in zip(structure.factors, structure.projections)]
        expected = 0
        for i, (F, p) in enumerate(zip(structure.factors, structure.projections)):
            others = Subset.full(R.order)
            for j, Z in enumerate(zero):
                if j != i:
                    others = others & Z
            for sub in max_denominator_sets(F).records:
                expected += 1
                S = sub.S.preimage(p)
                tag = f"{i + 1}:{sub.S.render()}"
                record = found.get(S)
                if not ev.check(f"maxden[{tag}]", record is not None, S.render()):
                    continue
                ev.check(f"ass[{tag}]", record.ass == sub.ass.preimage(p), record.ass.render())
                ev.check(f"core[{tag}]", record.core == (sub.core.preimage(p) & others), record.core.render())
                ev.check(f"localization_order[{tag}]", record.quotient.order == sub.quotient.order)
        ev.check("maxden_count", len(found) == expected, len(found))
    return _formula(ev, applicable)


@theorem(
    "lem-a26Mar14",
    "R is localization maximal and WLL iff R is local with rad = nil radical",
    "equivalence",
)
def _lem_a26mar14(R, ev):
    wll = is_weakly_left_localizable(R)
    lhs = all(
        [
            ev.check("lhs.localization_maximal", is_left_localization_maximal(R)),
            ev.check("lhs.wll", wll, wll.witness),
        ]
    )
    rhs = ev.check("rhs.local_nil_rad", local_with_nil_radical(R))
    return True, lhs, rhs


@theorem(
    "prop-b27Nov12",
    "the maximal localizable ideals are the ass-ideals of the maximal denominator sets and are pairwise incomparable",
    "formula",
)
def _prop_b27nov12(R, ev):
    max_ass = maximal_subsets(localizable_ideals(R))
    if R.order <= config.bounds.oracle_max_order:
        maximal = maximal_subsets(exhaustive_denominator_sets(R))
        ass_max_den = [ass_set(R, S) for S in maximal]
    else:
        ass_max_den = [r.ass for r in max_denominator_sets(R).records]
    ev.check("non_empty", bool(max_ass))
    ev.check("max_ass_equals_ass_max_den", {I.mask for I in max_ass} == {I.mask for I in ass_max_den},
             [I.render() for I in ass_max_den])
    comparable = [(a.render(), b.render()) for a in max_ass for b in max_ass if a is not b and a <= b]
    ev.check("incomparable", not comparable, comparable[:1])
    return _formula(ev, True)


@theorem(
    "prop-a14Dec12",
    "ll(R/ll) = 0, L(R) + ll inside L(R), and pi'(L(R)) inside L(R/ll)",
    "formula",
)
def _prop_a14dec12(R, ev):
    Rp, proj = _ll_quotient(R)
    ll = ll_radical(R)
    L = max_denominator_sets(R).localizable
    ev.check("quotient_ll_zero", len(ll_radical(Rp)) == 1, ll_radical(Rp).render())
    shifted = Subset.from_bools(_sum_flags(R, L, ll))
    ev.check("localizable_plus_ll", shifted <= L, (shifted - L).least())
    ev.check("localizable_projects_into", L.image(proj, Rp.order) <= max_denominator_sets(Rp).localizable)
    return _formula(ev, True)


def _sum_flags(R: FiniteRing, A: Subset, B: Subset) -> np.ndarray:
    flags = np.zeros(R.order, dtype=bool)
    if A and B:
        flags[R.add[A.indices()[:, None], B.indices()[None, :]]] = True
    return flags


@theorem(
    "prop-c13Dec12",
    "R is WLL iff R/ll is WLL, ll is nil and pi'(L(R)) = L(R/ll)",
    "equivalence",
)
def _prop_c13dec12(R, ev):
    wll = is_weakly_left_localizable(R)
    lhs = ev.check("lhs.wll", wll, wll.witness)
    Rp, proj = _ll_quotient(R)
    ll = ll_radical(R)
    quotient_wll = is_weakly_left_localizable(Rp)
    L, Lp = max_denominator_sets(R).localizable, max_denominator_sets(Rp).localizable
    rhs = all(
        [
            ev.check("rhs.quotient_wll", quotient_wll, quotient_wll.witness),
            ev.check("rhs.ll_nil", is_nil(R, ll), (ll - nilpotent_elements(R)).least()),
            ev.check("rhs.localizable_projects_onto", L.image(proj, Rp.order) == Lp),
        ]
    )
    return True, lhs, rhs


@theorem(
    "lem-a20Apr14",
    "for a maximal denominator set S: S^{-1}R is local iff R minus S is an ideal",
    "equivalence",
)
def _lem_a20apr14(R, ev):
    lhs = rhs = True
    for i, record in enumerate(max_denominator_sets(R).records):
        local = ev.check(f"lhs.localization_local[{i + 1}]", is_local(record.quotient))
        ideal = ev.check(f"rhs.complement_ideal[{i + 1}]", is_ideal(R, record.S.complement()))
        if local != ideal:
            ev.note("per_set_disagreement", record.S.render())
        lhs, rhs = lhs and local, rhs and ideal
    return True, lhs, rhs


@theorem(
    "cor-d28Mar14",
    "under the conditions of thm-28Mar14: phi is bijective onto the unit-coordinate sets of R/ll, "
    "C_l, L and Nil transfer along pi', cores project; with ll inside ass(C_l) "
    "C_l is a denominator set with ass = ll",
    "formula",
    has_hypotheses=True,
)
def _cor_d28mar14(R, ev):
    applicable = _conditions_28mar14(R, ev, "hyp")
    if applicable:
        profile = max_denominator_sets(R)
        phi = phi_map(R)
        Rp, proj = phi.quotient, phi.projection
        target = max_denominator_sets(Rp)
        d = central_idempotent_decomposition(Rp)

        ev.check("phi_bijective", phi.bijective)
        expected = {units(F).preimage(p).preimage(proj) for F, p in zip(d.factors, d.projections)}
        ev.check("maxden_unit_preimages", {r.S for r in profile.records} == expected)
        C = profile.completely_localizable
        ev.check("completely_localizable_preimage", C == units(Rp).preimage(proj), C.render())
        ev.check("completely_localizable_image", C.image(proj, Rp.order) == units(Rp))
        L, Lp = profile.localizable, target.localizable
        ev.check("localizable_image", L.image(proj, Rp.order) == Lp)
        ev.check("localizable_preimage", Lp.preimage(proj) == L)
        nil = nilpotent_elements(R)
        ev.check("nil_image", nil.image(proj, Rp.order) == nil_radical(Rp))
        ev.check("nil_preimage", nil_radical(Rp).preimage(proj) == nil)
        ev.check("nil_equals_nil_radical", nil == nil_radical(R), nil.render())
        ev.check("core_projection", all(img.core_projects for img in phi.images))

        ll = profile.ll_radical
        if ev.check("hyp.ll_inside_ass_cl", ll <= ass_set(R, C)):
            denominator = is_left_denominator(R, C)
            ev.check("cl.denominator", denominator, denominator.witness)
            ev.check("cl.ass_equals_ll", ass_set(R, C) == ll, ass_set(R, C).render())
            if denominator:
                ev.check("cl.localization_order", localize(R, C).ring.order == Rp.order)
    return _formula(ev, applicable)


@theorem(
    "thm-3.9-finite",
    "R is left localizable iff R is a product of finite fields",
    "equivalence",
)
def _thm_39_finite(R, ev):
    lloc = is_left_localizable_ring(R)
    lhs = ev.check("lhs.left_localizable", lloc, lloc.witness)
    rhs = ev.check(
        "rhs.field_factors", all(is_finite_field(F) for F in central_idempotent_decomposition(R).factors)
    )
    return True, lhs, rhs


def get_entry(theorem_id: str) -> Optional[TheoremEntry]:
    return REGISTRY.get(theorem_id)
