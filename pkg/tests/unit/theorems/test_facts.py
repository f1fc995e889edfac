from ringlab.theorems.facts import (
    decomposes_into_local_nil_rad,
    decomposes_into_locals,
    factor_unit_preimages,
    factor_zero_preimages,
    is_finite_field,
    localizations_wll,
    pairwise_not_nil_modulo,
)


def test_unit_and_zero_coordinate_sets_of_z6(z6):
    assert [S.render() for S in factor_unit_preimages(z6)] == ["{1,3,5}", "{1,2,4,5}"]
    assert [S.render() for S in factor_zero_preimages(z6)] == ["{0,2,4}", "{0,3}"]


def test_decomposition_facts(z12, t2f2):
    assert decomposes_into_locals(z12)
    assert decomposes_into_local_nil_rad(z12)
    assert not decomposes_into_locals(t2f2)


def test_finite_fields(ring):
    assert is_finite_field(ring("gf4"))
    assert is_finite_field(ring("f3"))
    assert not is_finite_field(ring("z4"))
    assert not is_finite_field(ring("m2f2"))


def test_localization_side_facts(z6):
    assert localizations_wll(z6) == (True, None)
    assert pairwise_not_nil_modulo(z6) == (True, None)
