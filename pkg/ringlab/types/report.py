"""
Classification reports and theorem verdicts.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .subset import Ideal, Subset


class FactorSummary(BaseModel):
    """One factor of the central idempotent decomposition."""

    model_config = ConfigDict(frozen=True)

    idempotent: int
    order: int
    local: bool


class DenSummary(BaseModel):
    """One maximal denominator set as it appears in a report."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    S: Subset
    ass: Ideal
    core: Subset


class Report(BaseModel):
    """Consolidated classification of a finite ring."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    order: int = Field(..., ge=2)
    units_count: int
    nilpotents: Subset
    nil_radical: Ideal
    jacobson_radical: Ideal
    ideals_count: int
    local: bool
    # Every finite ring is semilocal; recorded, never computed.
    semilocal: bool = True
    decomposition: List[FactorSummary]
    maxden: List[DenSummary]
    ll_radical: Ideal
    localizable: Subset
    completely_localizable: Subset
    non_localizable: Subset

    left_localizable: bool
    weakly_left_localizable: bool
    left_localization_maximal: bool
    witness_wll: Optional[int] = None
    witness_lloc: Optional[int] = None

    @model_validator(mode="after")
    def _consistent(self) -> "Report":
        if self.localizable & self.nilpotents:
            raise ValueError("localizable and nilpotent elements overlap")
        covers = len(self.localizable) + len(self.nilpotents) == self.order
        if covers != self.weakly_left_localizable:
            raise ValueError("WLL flag disagrees with |L| + |Nil| = order")
        if len(self.localizable) + len(self.non_localizable) != self.order:
            raise ValueError("localizable and non-localizable elements do not partition the ring")
        return self

    @property
    def maxden_count(self) -> int:
        return len(self.maxden)


class Condition(BaseModel):
    """A named sub-condition and its truth value."""

    model_config = ConfigDict(frozen=True)

    name: str
    value: bool


class Witness(BaseModel):
    """Evidence for a failed condition: an element, pair, or rendered set."""

    model_config = ConfigDict(frozen=True)

    condition: str
    value: str


class Verdict(BaseModel):
    """Result of checking one registry entry on one ring."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    id: str
    ring: str
    kind: Literal["equivalence", "formula"]
    applicable: bool
    lhs: bool
    rhs: bool
    passed: bool = Field(..., alias="pass")
    conditions: List[Condition] = Field(default_factory=list)
    witnesses: List[Witness] = Field(default_factory=list)

    @model_validator(mode="after")
    def _pass_rule(self) -> "Verdict":
        if self.kind == "formula" and self.lhs != self.rhs:
            raise ValueError("formula entries carry lhs = rhs")
        # formula entries pass when they hold; equivalence entries when both sides agree
        holds = self.lhs if self.kind == "formula" else self.lhs == self.rhs
        if self.passed != ((not self.applicable) or holds):
            raise ValueError("pass must equal (not applicable) or the entry holding")
        return self

    @property
    def vacuous(self) -> bool:
        return not self.applicable
