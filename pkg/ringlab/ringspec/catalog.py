"""
Built-in catalog of small rings used as fixtures and acceptance inputs.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from ..errors import UnknownCatalogName
from ..types.expr import Matrix, Product, RingExpr, Triangular, Zmod
from .tables import parse_table_text


@lru_cache(maxsize=1)
def _gf4():
    text = resources.files(__package__).joinpath("data/gf4.ring").read_text(encoding="utf-8")
    return parse_table_text(text, source="gf4.ring")


_F2 = Zmod(n=2)

_CATALOG = {
    "z4": (lambda: Zmod(n=4), "integers mod 4; local, not left localizable"),
    "z6": (lambda: Zmod(n=6), "integers mod 6 = F2 x F3"),
    "z8": (lambda: Zmod(n=8), "integers mod 8; local"),
    "z12": (lambda: Zmod(n=12), "integers mod 12 = F3 x Z/4"),
    "f2": (lambda: _F2, "field with 2 elements"),
    "f3": (lambda: Zmod(n=3), "field with 3 elements"),
    "gf4": (_gf4, "field with 4 elements, from tables"),
    "m2f2": (lambda: Matrix(k=2, base=_F2), "2 x 2 matrices over F2; simple, localization maximal"),
    "t2f2": (lambda: Triangular(k=2, base=_F2), "upper triangular 2 x 2 matrices over F2"),
    "t3f2": (lambda: Triangular(k=3, base=_F2), "upper triangular 3 x 3 matrices over F2"),
    "z4xz3": (lambda: Product(factors=[Zmod(n=4), Zmod(n=3)]), "Z/4 x Z/3"),
    "z4xm2f2": (lambda: Product(factors=[Zmod(n=4), Matrix(k=2, base=_F2)]), "Z/4 x M2(F2)"),
    "z6xz4": (lambda: Product(factors=[Zmod(n=6), Zmod(n=4)]), "Z/6 x Z/4"),
    "t2f2xz3": (lambda: Product(factors=[Triangular(k=2, base=_F2), Zmod(n=3)]), "T2(F2) x Z/3"),
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog_lookup(name: str) -> RingExpr:
    """Expression tree of a catalog ring."""
    try:
        factory, _ = _CATALOG[name]
    except KeyError:
        raise UnknownCatalogName(f"unknown catalog ring {name!r}", name) from None
    return factory()


def catalog_description(name: str) -> str:
    if name not in _CATALOG:
        raise UnknownCatalogName(f"unknown catalog ring {name!r}", name)
    return _CATALOG[name][1]
