from ringlab.core.classify import classification_report
from ringlab.core.localization import check_fraction_oracle, max_denominator_sets
from ringlab.ringspec.emit import emit, emit_catalog, emit_coverage, emit_oracle_diff
from ringlab.theorems import coverage_table, verify_all, verify_theorem


def test_report_record_format(z6):
    out = emit(classification_report(z6), "record")
    lines = out.splitlines()
    assert "maxden.count = 2" in lines
    assert "maxden.1.S = {1,2,4,5}" in lines
    assert "maxden.2.ass = {0,2,4}" in lines
    assert "maxden.2.core = {3}" in lines
    assert "ll = {0}" in lines
    assert "class.wll = true" in lines
    assert "class.lloc = true" in lines
    assert "decomp.1.idempotent = 3" in lines
    assert out.endswith("\n")


def test_report_record_carries_witnesses(z4):
    lines = emit(classification_report(z4), "record").splitlines()
    assert "class.lloc = false" in lines
    assert "class.lloc.witness = 2" in lines


def test_text_output_is_deterministic(z6):
    report = classification_report(z6)
    first = emit(report, "text")
    assert first == emit(report, "text")
    assert "{1,2,4,5}" in first


def test_profile_record(t2f2):
    lines = emit(max_denominator_sets(t2f2), "record").splitlines()
    assert "maxden.1.S = {1,3,5,7}" in lines
    assert "maxden.1.localization.order = 2" in lines


def test_verdict_records(z6):
    lines = emit([verify_theorem(z6, "thm-26Mar14")], "record").splitlines()
    assert lines == [
        "thm-26Mar14.applicable = true",
        "thm-26Mar14.lhs = true",
        "thm-26Mar14.rhs = true",
        "thm-26Mar14.pass = true",
    ]


def test_empty_verdict_list_emits_nothing():
    assert emit([], "record") == ""
    assert emit([], "text") == ""


def test_oracle_records(t2f2):
    lines = emit([check_fraction_oracle(t2f2, t2f2.subset([1, 3, 5, 7]))], "record").splitlines()
    assert "oracle.1.agrees = true" in lines


def test_oracle_diff_and_coverage(z6):
    assert "oracle.diff.count = 0" in emit_oracle_diff([z6.subset([1])], [], "record").splitlines()
    rows = coverage_table(verify_all(z6))
    assert "coverage.thm-26Mar14.both_true = 1" in emit_coverage(rows, "record").splitlines()
    assert "coverage" in emit_coverage(rows, "text")


def test_catalog_listing():
    out = emit_catalog([("z4", "Z 4", "integers mod 4")], "record")
    assert out == "catalog.z4 = Z 4\n"
