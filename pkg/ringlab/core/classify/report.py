"""
Consolidated classification report.
"""

from __future__ import annotations

import structlog

from ...types.report import DenSummary, FactorSummary, Report
from ..localization.maxden import max_denominator_sets
from ..ring.decomposition import central_idempotent_decomposition
from ..ring.elements import is_local, jacobson_radical, nil_radical, nilpotent_elements, units
from ..ring.finite_ring import FiniteRing
from ..ring.ideals import enumerate_ideals
from .predicates import is_left_localizable_ring, is_left_localization_maximal, is_weakly_left_localizable

logger = structlog.get_logger()


def classification_report(R: FiniteRing) -> Report:
    profile = max_denominator_sets(R)
    decomposition = central_idempotent_decomposition(R)
    wll = is_weakly_left_localizable(R)
    lloc = is_left_localizable_ring(R)

    report = Report(
        label=R.label,
        order=R.order,
        units_count=len(units(R)),
        nilpotents=nilpotent_elements(R),
        nil_radical=nil_radical(R),
        jacobson_radical=jacobson_radical(R),
        ideals_count=len(enumerate_ideals(R)),
        local=is_local(R),
        decomposition=[
            FactorSummary(idempotent=e, order=f.order, local=is_local(f))
            for e, f in zip(decomposition.idempotents, decomposition.factors)
        ],
        maxden=[DenSummary(S=r.S, ass=r.ass, core=r.core) for r in profile.records],
        ll_radical=profile.ll_radical,
        localizable=profile.localizable,
        completely_localizable=profile.completely_localizable,
        non_localizable=profile.localizable.complement(),
        left_localizable=lloc.holds,
        weakly_left_localizable=wll.holds,
        left_localization_maximal=is_left_localization_maximal(R),
        witness_wll=wll.witness,
        witness_lloc=lloc.witness,
    )
    logger.info("classification_report", ring=R.label, wll=report.weakly_left_localizable, maxden=report.maxden_count)
    return report
