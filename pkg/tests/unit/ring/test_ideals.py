import pytest

from ringlab.config import config
from ringlab.core.ring import (
    check_ideal_lattice,
    enumerate_ideals,
    ideal_generated,
    ideal_sum,
    is_ideal,
    quotient_ring,
    zmod,
)
from ringlab.errors import IdealBoundExceeded, ImproperIdeal


@pytest.mark.parametrize("name,count", [("z4", 3), ("z6", 4), ("z12", 6), ("t2f2", 5), ("m2f2", 2), ("f2", 2)])
def test_ideal_counts(ring, name, count):
    ideals = enumerate_ideals(ring(name))
    assert len(ideals) == count
    check_ideal_lattice(ring(name), ideals)


def test_ideals_are_sorted_by_size_then_mask(z6):
    assert [I.render() for I in enumerate_ideals(z6)] == ["{0}", "{0,3}", "{0,2,4}", "{0,1,2,3,4,5}"]


def test_every_nonzero_triangular_ideal_contains_e12(t2f2):
    for I in enumerate_ideals(t2f2):
        if len(I) > 1:
            assert 2 in I


def test_generated_ideals(t2f2):
    R = zmod(12)
    assert ideal_generated(R, [8]).render() == "{0,4,8}"
    assert ideal_sum(R, ideal_generated(R, [4]), ideal_generated(R, [6])).render() == "{0,2,4,6,8,10}"
    # two-sided ideal generated by E11 contains E12
    assert ideal_generated(t2f2, [4]).render() == "{0,2,4,6}"
    assert not is_ideal(t2f2, t2f2.subset([0, 4]))


def test_quotient_ring_labels_and_projection():
    R = zmod(12)
    Q, projection = quotient_ring(R, ideal_generated(R, [6]))
    assert Q.order == 6
    assert Q.label == "Z 12 / {0,6}"
    assert projection[7] == projection[1]
    same, _ = quotient_ring(R, R.subset([0]))
    assert same.label == "Z 12"


def test_quotient_by_whole_ring_is_improper(z6):
    with pytest.raises(ImproperIdeal):
        quotient_ring(z6, z6.full())


def test_ideal_bound(bounds):
    bounds.max_ideals = 2
    with pytest.raises(IdealBoundExceeded):
        enumerate_ideals(zmod(30))
    assert config.bounds.max_ideals == 2
