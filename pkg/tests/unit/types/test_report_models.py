import pytest
from pydantic import ValidationError

from ringlab.types import Check, Verdict, Zmod


def test_verdict_pass_rule_is_enforced():
    with pytest.raises(ValidationError):
        Verdict(id="x", ring="r", kind="equivalence", applicable=True, lhs=True, rhs=False, passed=True)


def test_vacuous_verdict_passes():
    v = Verdict(id="x", ring="r", kind="formula", applicable=False, lhs=True, rhs=True, passed=True)
    assert v.vacuous
    assert v.passed


def test_formula_verdict_has_equal_sides():
    with pytest.raises(ValidationError):
        Verdict(id="x", ring="r", kind="formula", applicable=True, lhs=True, rhs=False, passed=False)


def test_failing_formula_verdict_does_not_pass():
    with pytest.raises(ValidationError):
        Verdict(id="x", ring="r", kind="formula", applicable=True, lhs=False, rhs=False, passed=True)
    v = Verdict(id="x", ring="r", kind="formula", applicable=True, lhs=False, rhs=False, passed=False)
    assert not v.passed


def test_verdict_accepts_pass_alias():
    v = Verdict.model_validate(
        {"id": "x", "ring": "r", "kind": "equivalence", "applicable": True, "lhs": False, "rhs": False, "pass": True}
    )
    assert v.passed


def test_check_truthiness_and_witness():
    assert Check.ok()
    failed = Check.fail((2, 4), "Sr and Rs are disjoint")
    assert not failed
    assert failed.witness == (2, 4)


def test_zmod_expression_requires_modulus_at_least_two():
    with pytest.raises(ValidationError):
        Zmod(n=1)
    assert Zmod(n=6).render() == "Z 6"
