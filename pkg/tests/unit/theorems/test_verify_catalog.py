from ringlab.theorems import coverage_table, verify_all, verify_catalog


def test_coverage_of_a_small_run(ring):
    verdicts = [v for name in ["z6", "m2f2"] for v in verify_all(ring(name))]
    rows = {row.id: row for row in coverage_table(verdicts)}
    assert rows["thm-26Mar14"].both_true == 1
    assert rows["thm-26Mar14"].both_false == 1
    assert rows["thm-26Mar14"].covered
    assert rows["cor-b26Mar14"].vacuous == 1


def test_verify_catalog_subset():
    run = verify_catalog(["z4", "z6"])
    assert list(run.verdicts) == ["z4", "z6"]
    assert run.all_passed
    assert len(run.coverage) == 16
