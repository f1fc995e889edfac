"""
Error hierarchy for the ring laboratory.

Every error carries the process exit code the CLI maps it to and, where one
exists, a witness (failing triple, offending element pair, product chain).
"""

from typing import Any, Iterable, Optional


class RingLabError(Exception):
    """Base class for all lab errors."""

    exit_code: int = 2

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self) -> str:
        if self.witness is None:
            return self.message
        return f"{self.message} (witness: {self.witness})"


# --- Input errors (exit 2) ---

class InputError(RingLabError):
    """Malformed input or violated operation precondition."""

    exit_code = 2


class ParseError(InputError):
    """Ring expression could not be parsed."""

    def __init__(self, offset: int, expected: Iterable[str], found: str):
        self.offset = offset
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        super().__init__(
            f"parse error at offset {offset}: expected one of {', '.join(self.expected)}; found {found!r}"
        )


class FormatError(InputError):
    """Table file is not in the line-oriented table format."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class InvalidTables(InputError):
    """Addition/multiplication tables violate a ring axiom."""

    def __init__(self, axiom: str, witness: Any = None):
        self.axiom = axiom
        super().__init__(f"ring axiom violated: {axiom}", witness)


class UnknownCatalogName(InputError):
    """Catalog lookup of an unregistered name."""


class UnknownTheorem(InputError):
    """Theorem id not in the registry."""


class ImproperIdeal(InputError):
    """Operation requires a proper ideal but the ideal contains one."""


class NotMultiplicative(InputError):
    """Subset is not multiplicatively closed with 1 in S and 0 not in S."""


class NotOre(InputError):
    """Subset fails the left Ore condition."""


class NotDenominator(InputError):
    """Subset is not a left denominator set."""


class PrecondAssNotNested(InputError):
    """denominator_join requires ass(S) inside ass(T)."""


class ZeroAbsorbed(InputError):
    """Zero entered a multiplicative closure; witness is the product chain."""


# --- Bound errors (exit 3) ---

class BoundExceeded(RingLabError):
    """A configured computation bound was exceeded."""

    exit_code = 3


class OrderBoundExceeded(BoundExceeded):
    """Ring order above bounds.max_order."""


class IdealBoundExceeded(BoundExceeded):
    """Ideal count above bounds.max_ideals."""


class OracleBoundExceeded(BoundExceeded):
    """Oracle input above bounds.oracle_max_order or bounds.oracle_pair_limit."""


# --- Internal (exit 1) ---

class InvariantViolation(RingLabError):
    """A documented postcondition did not hold."""

    exit_code = 1
