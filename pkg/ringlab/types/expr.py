"""
Ring construction trees.

A `RingExpr` is a tagged union of constructor nodes. Trees are produced by the
ringspec parser, the table loader and the catalog, and consumed by
`ringlab.core.ring.constructors.construct`.
"""

from __future__ import annotations

from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class _ExprBase(BaseModel):
    model_config = ConfigDict(frozen=True)


class Zmod(_ExprBase):
    """Integers modulo n."""

    kind: Literal["zmod"] = "zmod"
    n: int = Field(..., ge=2, description="Modulus")

    def render(self) -> str:
        return f"Z {self.n}"


class Matrix(_ExprBase):
    """Full k x k matrix ring over a base ring."""

    kind: Literal["matrix"] = "matrix"
    k: int = Field(..., ge=1)
    base: "RingExpr"

    def render(self) -> str:
        return f"M {self.k} ({self.base.render()})"


class Triangular(_ExprBase):
    """Upper triangular k x k matrices over a base ring."""

    kind: Literal["triangular"] = "triangular"
    k: int = Field(..., ge=1)
    base: "RingExpr"

    def render(self) -> str:
        return f"T {self.k} ({self.base.render()})"


class Product(_ExprBase):
    """Direct product of at least two rings."""

    kind: Literal["product"] = "product"
    factors: List["RingExpr"] = Field(..., min_length=2)

    def render(self) -> str:
        return "P (" + ", ".join(f.render() for f in self.factors) + ")"


class Quotient(_ExprBase):
    """Quotient by the two-sided ideal generated by element indices of the child."""

    kind: Literal["quotient"] = "quotient"
    base: "RingExpr"
    generators: List[int] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _non_negative(self) -> "Quotient":
        if any(g < 0 for g in self.generators):
            raise ValueError("ideal generators must be element indices")
        return self

    def render(self) -> str:
        return f"Q ({self.base.render()}; " + ", ".join(str(g) for g in self.generators) + ")"


class Table(_ExprBase):
    """Inline addition and multiplication tables."""

    kind: Literal["table"] = "table"
    order: int = Field(..., ge=1)
    one: int = Field(..., ge=0)
    add: List[List[int]]
    mul: List[List[int]]
    source: str = Field(default="", description="Path the tables were loaded from, if any")

    @model_validator(mode="after")
    def _square(self) -> "Table":
        for name, rows in (("add", self.add), ("mul", self.mul)):
            if len(rows) != self.order or any(len(row) != self.order for row in rows):
                raise ValueError(f"{name} table must be {self.order} x {self.order}")
        return self

    def render(self) -> str:
        return f"table:{self.source}" if self.source else f"table[{self.order}]"


class Catalog(_ExprBase):
    """Reference to a built-in catalog ring."""

    kind: Literal["catalog"] = "catalog"
    name: str = Field(..., min_length=1)

    def render(self) -> str:
        return f"@{self.name}"


RingExpr = Annotated[
    Union[Zmod, Matrix, Triangular, Product, Quotient, Table, Catalog],
    Field(discriminator="kind"),
]

for _model in (Matrix, Triangular, Product, Quotient):
    _model.model_rebuild()
