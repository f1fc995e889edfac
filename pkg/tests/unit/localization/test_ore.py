import pytest

from ringlab.core.localization import (
    ass_set,
    core,
    denominator_join,
    is_left_denominator,
    is_left_ore,
    is_localizable_ideal,
    multiplicative_check,
    multiplicative_closure,
    right_ass_set,
    saturate,
)
from ringlab.core.localization.ore import require_denominator
from ringlab.errors import NotDenominator, NotMultiplicative, NotOre, PrecondAssNotNested, ZeroAbsorbed
from ringlab.types import Ideal


def test_closure_of_units(z6):
    assert multiplicative_closure(z6, [5]).render() == "{1,5}"
    assert multiplicative_closure(z6, [2]).render() == "{1,2,4}"


def test_closure_reaching_zero_reports_product_chain(z4):
    with pytest.raises(ZeroAbsorbed) as exc:
        multiplicative_closure(z4, [2])
    assert exc.value.witness == [2, 2]


def test_multiplicative_check(z6):
    assert not multiplicative_check(z6, z6.subset([2, 4]))
    assert not multiplicative_check(z6, z6.subset([0, 1]))
    assert multiplicative_check(z6, z6.subset([1, 3]))
    with pytest.raises(NotMultiplicative):
        is_left_ore(z6, z6.subset([1, 2]))


def test_ass_of_odd_elements_in_z6(z6):
    ass = ass_set(z6, z6.subset([1, 3, 5]))
    assert ass.render() == "{0,2,4}"
    assert isinstance(ass, Ideal)


def test_right_ass_set(t2f2):
    # r * E22 = 0 exactly when the second column of r vanishes
    assert right_ass_set(t2f2, t2f2.subset([1])).render() == "{0,4}"


def test_commutative_multiplicative_sets_are_denominator_sets(z6):
    for gens in ([2], [3], [5], [2, 5]):
        S = multiplicative_closure(z6, gens)
        assert is_left_denominator(z6, S)


def test_zero_first_column_saturation_is_not_ore(t2f2):
    S = saturate(t2f2, t2f2.subset([0, 1, 2, 3]))
    assert S.render() == "{4,5,6,7}"
    ore = is_left_ore(t2f2, S)
    assert not ore
    # S E12 = {E12} misses R E11 = {0, E11}
    assert ore.witness == (2, 4)
    assert not is_localizable_ideal(t2f2, t2f2.subset([0, 1, 2, 3]))
    with pytest.raises(NotDenominator):
        require_denominator(t2f2, S)
    with pytest.raises(NotOre):
        core(t2f2, S)


def test_zero_second_row_ideal_is_localizable(t2f2):
    I = t2f2.subset([0, 2, 4, 6])
    assert saturate(t2f2, I).render() == "{1,3,5,7}"
    assert is_localizable_ideal(t2f2, I)


def test_core_is_exact_kernel_match(z6):
    assert core(z6, z6.subset([1, 2, 4, 5])).render() == "{2,4}"
    assert core(z6, z6.subset([1, 3, 5])).render() == "{3}"


def test_denominator_join(z6):
    joined = denominator_join(z6, z6.subset([1, 5]), z6.subset([1, 2, 4]))
    assert joined.render() == "{1,2,4,5}"
    assert ass_set(z6, joined).render() == "{0,3}"


def test_denominator_join_requires_nested_ass(z6):
    with pytest.raises(PrecondAssNotNested):
        denominator_join(z6, z6.subset([1, 3, 5]), z6.subset([1, 5]))


def test_denominator_join_in_triangular_ring(t2f2):
    # {I, E22}: E22 r = 0 exactly when the second row of r vanishes
    idempotent = t2f2.subset([1, 5])
    assert is_left_denominator(t2f2, idempotent)
    assert ass_set(t2f2, idempotent).render() == "{0,2,4,6}"
    unit_group = t2f2.subset([5, 7])
    joined = denominator_join(t2f2, unit_group, idempotent)
    assert joined.render() == "{1,3,5,7}"
    assert ass_set(t2f2, joined).render() == "{0,2,4,6}"
    assert right_ass_set(t2f2, joined).render() == "{0,4,6}"
    with pytest.raises(PrecondAssNotNested):
        denominator_join(t2f2, idempotent, unit_group)
