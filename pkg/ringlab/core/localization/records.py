"""
Denominator-set dossiers and localization views.
"""

from __future__ import annotations

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ...types.subset import Ideal, Subset
from ..ring.finite_ring import FiniteRing


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class DenRecord(_Record):
    """One left denominator set with its ass-ideal, core and localization R/ass(S)."""

    S: Subset
    ass: Ideal
    core: Subset
    quotient: FiniteRing
    projection: np.ndarray
    saturated: bool = Field(..., description="S equals the saturation of ass")


class LocView(_Record):
    """S^{-1}R realized as the quotient R/ass(S)."""

    source: FiniteRing
    den: DenRecord

    @property
    def ring(self) -> FiniteRing:
        return self.den.quotient


class MaxDenProfile(_Record):
    """The maximal left denominator sets and the sets derived from them."""

    ring: FiniteRing
    records: List[DenRecord]
    ll_radical: Ideal
    localizable: Subset
    completely_localizable: Subset
    localizable_ideals: List[Ideal] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def ass_ideals(self) -> list[Ideal]:
        return [r.ass for r in self.records]


class PhiImage(_Record):
    """Image pi'(S) of one maximal denominator set in R' = R/ll."""

    source: Subset
    image: Subset
    image_ass: Ideal
    denominator: bool = Field(..., description="pi'(S) is a left denominator set of R'")
    ass_matches: bool = Field(..., description="ass(pi'(S)) = pi'(ass(S))")
    maximal: bool = Field(..., description="pi'(S) is a maximal denominator set of R'")
    core_projects: bool = Field(..., description="pi'(core S) inside core(pi'(S))")


class PhiMap(_Record):
    """phi : maxDen(R) -> maxDen(R/ll), S -> pi'(S)."""

    quotient: FiniteRing
    projection: np.ndarray
    images: List[PhiImage]
    target: List[Subset]
    injective: bool
    surjective: bool
    regular_preimage_inside: bool = Field(..., description="pi'^{-1}(C_l(R')) inside C_l(R)")
    regular_transfer: Optional[bool] = Field(
        None, description="when phi is onto: pi'^{-1}(C_l(R')) = C_l(R) and pi'(C_l(R)) = C_l(R')"
    )

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


class OracleComparison(_Record):
    """Pointwise comparison of the fraction construction with R/ass(S)."""

    ring: str
    S: Subset
    fraction_order: int
    localization_order: int
    well_defined: bool
    bijective: bool
    additive: bool
    multiplicative: bool
    witness: Optional[str] = None

    @property
    def agrees(self) -> bool:
        return self.well_defined and self.bijective and self.additive and self.multiplicative
