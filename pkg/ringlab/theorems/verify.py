"""
Theorem verification over single rings and over the whole catalog.
"""

from __future__ import annotations

from typing import Literal

import structlog
from pydantic import BaseModel, ConfigDict, Field

from ..core.ring.constructors import construct
from ..core.ring.finite_ring import FiniteRing
from ..errors import UnknownTheorem
from ..monitoring.metrics import theorem_verdicts
from ..types.expr import Catalog
from ..types.report import Verdict
from .registry import REGISTRY, Evidence

logger = structlog.get_logger()


def list_theorems() -> list[tuple[str, str]]:
    """(id, description) for every registry entry, in registry order."""
    return [(entry.id, entry.description) for entry in REGISTRY.values()]


def verify_theorem(R: FiniteRing, theorem_id: str) -> Verdict:
    entry = REGISTRY.get(theorem_id)
    if entry is None:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}", theorem_id)

    evidence = Evidence()
    applicable, lhs, rhs = entry.check(R, evidence)
    verdict = Verdict(
        id=entry.id,
        ring=R.label,
        kind=entry.kind,
        applicable=applicable,
        lhs=lhs,
        rhs=rhs,
        passed=(not applicable) or (lhs if entry.kind == "formula" else lhs == rhs),
        conditions=evidence.conditions,
        witnesses=evidence.witnesses,
    )
    outcome = "vacuous" if not applicable else ("pass" if verdict.passed else "fail")
    theorem_verdicts.labels(theorem=entry.id, outcome=outcome).inc()
    if not verdict.passed:
        logger.error("theorem_failed", theorem=entry.id, ring=R.label, lhs=lhs, rhs=rhs)
    else:
        logger.debug("theorem_verdict", theorem=entry.id, ring=R.label, outcome=outcome)
    return verdict


def verify_all(R: FiniteRing) -> list[Verdict]:
    return [verify_theorem(R, theorem_id) for theorem_id in REGISTRY]


class CoverageRow(BaseModel):
    """How one registry entry was exercised across the catalog."""

    model_config = ConfigDict(frozen=True)

    id: str
    kind: Literal["equivalence", "formula"]
    both_true: int = 0
    both_false: int = 0
    vacuous: int = 0
    failed: int = 0
    needs_vacuous: bool = False

    @property
    def covered(self) -> bool:
        if self.kind == "equivalence":
            return self.both_true > 0 and self.both_false > 0
        return self.both_true > 0 and (self.vacuous > 0 or not self.needs_vacuous)


class CatalogRun(BaseModel):
    """Verdicts for every catalog ring plus the coverage table."""

    model_config = ConfigDict(frozen=True)

    verdicts: dict[str, list[Verdict]] = Field(default_factory=dict)
    coverage: list[CoverageRow] = Field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(v.passed for vs in self.verdicts.values() for v in vs)


def coverage_table(verdicts: list[Verdict]) -> list[CoverageRow]:
    rows = []
    for entry in REGISTRY.values():
        mine = [v for v in verdicts if v.id == entry.id]
        rows.append(
            CoverageRow(
                id=entry.id,
                kind=entry.kind,
                both_true=sum(v.applicable and v.lhs and v.rhs for v in mine),
                both_false=sum(v.applicable and not v.lhs and not v.rhs for v in mine),
                vacuous=sum(not v.applicable for v in mine),
                failed=sum(not v.passed for v in mine),
                needs_vacuous=entry.has_hypotheses,
            )
        )
    return rows


def verify_catalog(names: list[str] | None = None) -> CatalogRun:
    """verify_all over every catalog ring, in catalog order."""
    from ..ringspec.catalog import catalog_names

    verdicts: dict[str, list[Verdict]] = {}
    for name in names or catalog_names():
        ring = construct(Catalog(name=name))
        verdicts[name] = verify_all(ring)
        logger.info("verify_catalog_ring", ring=name, passed=all(v.passed for v in verdicts[name]))
    flat = [v for vs in verdicts.values() for v in vs]
    return CatalogRun(verdicts=verdicts, coverage=coverage_table(flat))
