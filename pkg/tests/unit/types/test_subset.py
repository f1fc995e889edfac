import numpy as np
import pytest

from ringlab.types import Ideal, Subset
from ringlab.types.subset import maximal_subsets, sort_subsets


def test_subset_members_and_render():
    s = Subset.of(6, [5, 1, 3])
    assert list(s) == [1, 3, 5]
    assert len(s) == 3
    assert 3 in s and 2 not in s
    assert s.render() == "{1,3,5}"
    assert s.least() == 1
    assert Subset.empty(6).least() is None


def test_subset_rejects_out_of_range_indices():
    with pytest.raises(ValueError):
        Subset.of(4, [4])
    with pytest.raises(ValueError):
        Subset(4, 1 << 4)


def test_subset_set_algebra():
    a = Subset.of(8, [0, 1, 2])
    b = Subset.of(8, [2, 3])
    assert (a | b) == Subset.of(8, [0, 1, 2, 3])
    assert (a & b) == Subset.of(8, [2])
    assert (a - b) == Subset.of(8, [0, 1])
    assert a.complement() == Subset.of(8, [3, 4, 5, 6, 7])
    assert Subset.of(8, [1]) < a
    assert not a <= b


def test_subset_is_immutable():
    s = Subset.of(4, [1])
    with pytest.raises(AttributeError):
        s.mask = 3


def test_subset_rejects_mixed_orders():
    with pytest.raises(ValueError):
        Subset.of(4, [1]) | Subset.of(6, [1])


def test_image_and_preimage_along_reduction_mod_3():
    reduce = np.arange(6) % 3
    s = Subset.of(6, [1, 4, 5])
    assert s.image(reduce, 3) == Subset.of(3, [1, 2])
    assert Subset.of(3, [0]).preimage(reduce) == Subset.of(6, [0, 3])


def test_canonical_sort_is_cardinality_then_mask():
    subsets = [Subset.of(4, [0, 1]), Subset.of(4, [2]), Subset.of(4, [1]), Subset.of(4, [2])]
    assert [s.render() for s in sort_subsets(subsets)] == ["{1}", "{2}", "{0,1}"]


def test_maximal_subsets_keeps_incomparable_tops():
    pool = [Subset.of(6, [1]), Subset.of(6, [1, 5]), Subset.of(6, [1, 3, 5]), Subset.of(6, [1, 2, 4, 5])]
    assert [s.render() for s in maximal_subsets(pool)] == ["{1,3,5}", "{1,2,4,5}"]


def test_ideal_equals_subset_with_same_members():
    assert Ideal.of(4, [0, 2]) == Subset.of(4, [0, 2])
    assert hash(Ideal.of(4, [0, 2])) == hash(Subset.of(4, [0, 2]))


def test_subset_compares_with_ideal_in_both_directions():
    small = Subset.of(6, [0, 3])
    ideal = Ideal.of(6, [0, 2, 3, 4])
    assert small <= ideal and small < ideal
    assert ideal >= small and ideal > small
    assert not ideal <= small and not ideal < small
    assert not small >= ideal and not small > ideal
    same = Subset.of(6, [0, 2, 3, 4])
    assert same <= ideal and same >= ideal
    assert not same < ideal and not ideal > same
