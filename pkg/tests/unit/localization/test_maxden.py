from ringlab.core.localization import (
    is_left_localizable_element,
    largest_regular_denominator_set,
    ll_radical,
    localizable_ideals,
    localize,
    max_denominator_sets,
    non_localizable_elements,
    phi_map,
)
from ringlab.core.ring import units


def test_z6_profile(z6):
    profile = max_denominator_sets(z6)
    assert len(profile) == 2
    assert [r.S.render() for r in profile.records] == ["{1,2,4,5}", "{1,3,5}"]
    assert [r.ass.render() for r in profile.records] == ["{0,3}", "{0,2,4}"]
    assert [r.core.render() for r in profile.records] == ["{2,4}", "{3}"]
    assert profile.ll_radical.render() == "{0}"
    assert profile.localizable.render() == "{1,2,3,4,5}"
    assert profile.completely_localizable.render() == "{1,5}"
    assert all(r.saturated for r in profile.records)


def test_z4_profile(z4):
    profile = max_denominator_sets(z4)
    (record,) = profile.records
    assert record.S.render() == "{1,3}"
    assert record.core.render() == "{1,3}"
    assert non_localizable_elements(z4).render() == "{0,2}"
    assert not is_left_localizable_element(z4, 2)


def test_z12_profile(z12):
    records = max_denominator_sets(z12).records
    assert [r.ass.render() for r in records] == ["{0,4,8}", "{0,3,6,9}"]
    assert records[0].S.render() == "{1,3,5,7,9,11}"
    assert records[0].core.render() == "{3,9}"
    assert records[1].core.render() == "{4,8}"
    assert ll_radical(z12).render() == "{0}"


def test_triangular_profile(t2f2):
    profile = max_denominator_sets(t2f2)
    (record,) = profile.records
    assert record.S.render() == "{1,3,5,7}"
    assert profile.ll_radical.render() == "{0,2,4,6}"
    assert record.quotient.order == 2


def test_localizable_ideals_of_z6(z6):
    assert [I.render() for I in localizable_ideals(z6)] == ["{0}", "{0,3}", "{0,2,4}"]


def test_localize_realizes_quotient(z6):
    assert localize(z6, z6.subset([1, 5])).ring.order == 6
    view = localize(z6, z6.subset([1, 2, 4, 5]))
    assert view.ring.order == 3
    assert view.source is z6


def test_units_are_the_largest_regular_denominator_set(m2f2):
    U = largest_regular_denominator_set(m2f2)
    assert U == units(m2f2)
    assert len(U) == 6
    assert max_denominator_sets(m2f2).records[0].S == U


def test_phi_onto_quotient_by_ll(t2f2, z6):
    phi = phi_map(t2f2)
    assert phi.quotient.order == 2
    assert phi.bijective
    assert [img.image.render() for img in phi.images] == ["{1}"]
    assert phi_map(z6).bijective
