import pytest

from ringlab.core.ring import construct
from ringlab.errors import UnknownCatalogName
from ringlab.ringspec import catalog_description, catalog_lookup, catalog_names
from ringlab.types import Catalog


def test_catalog_names_are_ordered():
    names = catalog_names()
    assert names[:4] == ["z4", "z6", "z8", "z12"]
    assert {"m2f2", "t2f2", "t3f2", "gf4", "z4xm2f2"} <= set(names)


@pytest.mark.parametrize(
    "name,order",
    [("z8", 8), ("gf4", 4), ("t3f2", 64), ("z4xm2f2", 64), ("z6xz4", 24), ("t2f2xz3", 24)],
)
def test_catalog_orders(ring, name, order):
    assert ring(name).order == order


def test_unknown_name():
    with pytest.raises(UnknownCatalogName):
        catalog_lookup("z5")
    with pytest.raises(UnknownCatalogName):
        construct(Catalog(name="nope"))
    with pytest.raises(UnknownCatalogName):
        catalog_description("nope")


def test_gf4_comes_from_packaged_tables():
    expr = catalog_lookup("gf4")
    assert expr.kind == "table"
    assert expr.source == "gf4.ring"
