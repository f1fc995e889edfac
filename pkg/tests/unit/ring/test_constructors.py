import pytest

from ringlab.core.ring import construct, matrix, triangular, zmod
from ringlab.errors import ImproperIdeal, InvalidTables
from ringlab.types import Catalog, Matrix, Product, Quotient, Triangular, Zmod


def test_zmod_residue_indexing():
    R = construct(Zmod(n=6))
    assert R.order == 6
    assert R.label == "Z 6"
    assert R.add[4, 5] == 3
    assert R.mul[4, 5] == 2


def test_matrix_ring_over_f2():
    R = matrix(2, zmod(2))
    assert R.order == 16
    # identity [[1, 0], [0, 1]] = 8 + 1
    assert R.one == 9
    # E11 * E12 = E12, E12 * E11 = 0
    assert R.mul[8, 4] == 4
    assert R.mul[4, 8] == 0


def test_triangular_ring_over_f2():
    R = triangular(2, zmod(2))
    assert R.order == 8
    assert R.one == 5
    # E11 * E12 = E12, E12 * E22 = E12, E22 * E12 = 0
    assert R.mul[4, 2] == 2
    assert R.mul[2, 1] == 2
    assert R.mul[1, 2] == 0


def test_triangular_three_by_three_order():
    assert construct(Triangular(k=3, base=Zmod(n=2))).order == 64


def test_product_mixed_radix_and_projections():
    R = construct(Product(factors=[Zmod(n=4), Zmod(n=3)]))
    assert R.order == 12
    assert R.one == 1 * 3 + 1
    structure = R.structure
    assert structure is not None and structure.source == "product"
    assert [F.order for F in structure.factors] == [4, 3]
    # (3, 2) -> index 11
    assert structure.projections[0][11] == 3
    assert structure.projections[1][11] == 2


def test_quotient_expression():
    R = construct(Quotient(base=Zmod(n=12), generators=[6]))
    assert R.order == 6
    assert R.label == "Q (Z 12; 6)"


def test_quotient_by_unit_is_improper():
    with pytest.raises(ImproperIdeal):
        construct(Quotient(base=Zmod(n=6), generators=[5]))


def test_quotient_generator_out_of_range():
    with pytest.raises(InvalidTables):
        construct(Quotient(base=Zmod(n=6), generators=[6]))


def test_catalog_ring_takes_catalog_name_as_label():
    R = construct(Catalog(name="m2f2"))
    assert R.label == "m2f2"
    assert R.same_tables(construct(Matrix(k=2, base=Zmod(n=2))))
