"""
Boolean check results that carry a witness.
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict


class Check(BaseModel):
    """Outcome of a predicate; `witness` names the least failing element, pair or set."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    holds: bool
    witness: Optional[Any] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls) -> "Check":
        return cls(holds=True)

    @classmethod
    def fail(cls, witness: Any, reason: str = "") -> "Check":
        return cls(holds=False, witness=witness, reason=reason)
