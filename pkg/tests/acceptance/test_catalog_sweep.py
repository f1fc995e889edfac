"""
Catalog-wide sweeps: oracle equivalence, fraction oracle, verdict soundness and coverage.
"""

import pytest

from ringlab.config import config
from ringlab.core.localization import (
    check_fraction_oracle,
    check_regular_collapse,
    exhaustive_denominator_sets,
    largest_regular_denominator_set,
    max_denominator_sets,
    maxden_oracle_diff,
)
from ringlab.core.ring import left_regular_elements, right_regular_elements, units
from ringlab.ringspec import catalog_names
from ringlab.theorems import verify_all, verify_catalog, verify_theorem

pytestmark = pytest.mark.acceptance


def _oracle_sized(ring, name):
    R = ring(name)
    if R.order > config.bounds.oracle_max_order:
        pytest.skip(f"{name} has order {R.order}, above the oracle bound")
    return R


@pytest.mark.parametrize("name", catalog_names())
def test_saturation_matches_exhaustive_maximal_sets(ring, name):
    R = _oracle_sized(ring, name)
    assert maxden_oracle_diff(R) == []


@pytest.mark.parametrize("name", catalog_names())
def test_fraction_oracle_matches_every_denominator_set(ring, name):
    R = _oracle_sized(ring, name)
    disagreements = [S.render() for S in exhaustive_denominator_sets(R) if not check_fraction_oracle(R, S).agrees]
    assert disagreements == []


@pytest.mark.parametrize("name", catalog_names())
def test_finite_regularity_collapse(ring, name):
    R = ring(name)
    U = units(R)
    assert left_regular_elements(R) == U == right_regular_elements(R)
    assert largest_regular_denominator_set(R) == U
    assert all(U <= record.S for record in max_denominator_sets(R).records)
    if R.order <= config.bounds.oracle_max_order:
        assert check_regular_collapse(R)


@pytest.mark.parametrize("name", catalog_names())
def test_every_verdict_passes(ring, name):
    failed = [(v.id, [w.value for w in v.witnesses]) for v in verify_all(ring(name)) if not v.passed]
    assert failed == []


@pytest.mark.parametrize("name", catalog_names())
def test_maximal_localizations_agree_with_ideal_complements(ring, name):
    verdict = verify_theorem(ring(name), "lem-a20Apr14")
    assert [w for w in verdict.witnesses if w.condition == "per_set_disagreement"] == []


@pytest.mark.parametrize("name", ["z4xz3", "z4xm2f2", "z6xz4", "t2f2xz3"])
def test_product_laws(ring, name):
    R = ring(name)
    for theorem_id in ("thm-9Feb13", "thm-c26Dec12"):
        verdict = verify_theorem(R, theorem_id)
        assert verdict.applicable
        assert verdict.passed


def test_product_maxden_count_is_sum_of_factor_counts(ring):
    assert len(max_denominator_sets(ring("z6xz4"))) == len(max_denominator_sets(ring("z6"))) + len(
        max_denominator_sets(ring("z4"))
    )
    assert len(max_denominator_sets(ring("t2f2xz3"))) == 2


def test_catalog_coverage():
    run = verify_catalog()
    assert run.all_passed
    uncovered = [row.id for row in run.coverage if not row.covered]
    assert uncovered == []
