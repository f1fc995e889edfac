from ringlab.core.ring import (
    central_idempotent_decomposition,
    corner_ring,
    primitive_central_idempotents,
    product_structure,
    zmod,
)


def test_z6_decomposes_into_f2_and_f3(z6):
    d = central_idempotent_decomposition(z6)
    assert d.idempotents == (3, 4)
    assert d.factor_orders() == [2, 3]
    assert d.all_local()


def test_z12_decomposition(z12):
    d = central_idempotent_decomposition(z12)
    assert d.idempotents == (4, 9)
    assert d.factor_orders() == [3, 4]


def test_indecomposable_rings(t2f2, m2f2):
    assert central_idempotent_decomposition(t2f2).trivial
    assert primitive_central_idempotents(m2f2) == [m2f2.one]
    assert product_structure(t2f2) is None


def test_corner_ring_has_idempotent_as_identity():
    R = zmod(12)
    corner, projection = corner_ring(R, 9)
    assert corner.order == 4
    assert projection[R.one] == corner.one


def test_product_structure_sources(ring):
    assert product_structure(ring("z4xz3")).source == "product"
    structure = product_structure(zmod(6))
    assert structure.source == "idempotents"
    assert len(structure) == 2
