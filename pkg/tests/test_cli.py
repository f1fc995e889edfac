import pytest
from click.testing import CliRunner

from ringlab.cli import cli, load_ring, run
from ringlab.config import config
from ringlab.theorems import registry


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_analyze_record(runner):
    result = runner.invoke(cli, ["analyze", "Z 6", "--format", "record"])
    assert result.exit_code == 0
    assert "maxden.count = 2" in result.stdout.splitlines()


def test_analyze_is_byte_identical(runner):
    first = runner.invoke(cli, ["analyze", "@t2f2"])
    second = runner.invoke(cli, ["analyze", "@t2f2"])
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def test_order_one_is_an_input_error(runner):
    result = runner.invoke(cli, ["analyze", "Z 1"])
    assert result.exit_code == 2


def test_verify_all_on_t2f2(runner):
    result = runner.invoke(cli, ["verify", "@t2f2", "--all", "--format", "record"])
    assert result.exit_code == 0
    passes = [line for line in result.stdout.splitlines() if line.endswith(".pass = true")]
    assert len(passes) == 16


def test_verify_text_lists_every_theorem(runner):
    result = runner.invoke(cli, ["verify", "z6", "--all"])
    assert result.exit_code == 0
    assert "thm-3.9-finite" in result.stdout


def test_verify_needs_exactly_one_selector(runner):
    assert runner.invoke(cli, ["verify", "z6"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "z6", "--all", "--theorem", "thm-26Mar14"]).exit_code == 2


def test_verify_unknown_theorem(runner):
    assert runner.invoke(cli, ["verify", "z6", "--theorem", "thm-0"]).exit_code == 2


def test_maxden_with_oracle(runner):
    result = runner.invoke(cli, ["maxden", "z6", "--oracle", "--format", "record"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "oracle.exhaustive.count = 7" in lines
    assert "oracle.diff.count = 0" in lines


def test_oracle_bound_exit_code(runner):
    result = runner.invoke(cli, ["maxden", "z6xz4", "--oracle"])
    assert result.exit_code == 3


def test_bound_flags_are_scoped_to_the_invocation(runner):
    before = config.bounds.max_order
    result = runner.invoke(cli, ["analyze", "Z 12", "--max-order", "8"])
    assert result.exit_code == 3
    assert config.bounds.max_order == before


def test_raised_oracle_bound(runner):
    result = runner.invoke(cli, ["oracle", "z12", "--oracle-max-order", "12", "--format", "record"])
    assert result.exit_code == 0
    assert "oracle.1.agrees = true" in result.stdout.splitlines()


def test_fraction_oracle_command(runner):
    result = runner.invoke(cli, ["oracle", "t2f2"])
    assert result.exit_code == 0


def test_catalog_commands(runner):
    listing = runner.invoke(cli, ["catalog", "list", "--format", "record"])
    assert listing.exit_code == 0
    assert "catalog.t2f2 = T 2 (Z 2)" in listing.stdout.splitlines()
    show = runner.invoke(cli, ["catalog", "show", "gf4"])
    assert show.exit_code == 0
    assert "order 4" in show.stdout
    assert runner.invoke(cli, ["catalog", "show", "nope"]).exit_code == 2


def test_table_source(runner, tmp_path):
    path = tmp_path / "gf4.ring"
    path.write_text(runner.invoke(cli, ["catalog", "show", "gf4"]).stdout)
    result = runner.invoke(cli, ["analyze", f"table:{path}", "--format", "record"])
    assert result.exit_code == 0
    assert "ring.units = 3" in result.stdout.splitlines()


def test_run_returns_exit_codes():
    assert run(["analyze", "Z 1"]) == 2
    assert run(["catalog", "list"]) == 0
    assert run(["no-such-command"]) == 2


def test_load_ring_accepts_bare_catalog_names():
    assert load_ring("z4").label == "z4"
    assert load_ring("@z4").label == "z4"
    assert load_ring("Z 4").label == "Z 4"


def test_verify_exits_nonzero_on_failing_formula(runner, monkeypatch):
    monkeypatch.setattr(registry, "localizable_ideals", lambda R: [])
    result = runner.invoke(cli, ["verify", "z6", "--theorem", "prop-b27Nov12", "--format", "record"])
    assert result.exit_code == 1
    assert "prop-b27Nov12.pass = false" in result.stdout.splitlines()
