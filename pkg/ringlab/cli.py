"""
Command-line entry point.

    ringlab analyze <src> [--format text|record]
    ringlab maxden <src> [--oracle]
    ringlab verify <src> (--theorem <id> | --all)
    ringlab verify-catalog
    ringlab oracle <src>
    ringlab catalog list | show <name>

A ring source is a catalog name ("z6"), "@name", "table:<path>" or an
expression ("T 2 (Z 2)"). Exit codes: 0 success, 1 failed verdict or oracle
disagreement, 2 input error, 3 bound exceeded.
"""

from __future__ import annotations

import functools
import sys
from typing import Callable, Optional, Sequence

import click
import structlog

from .config import config
from .core.classify import classification_report
from .core.localization import (
    check_fraction_oracle,
    exhaustive_denominator_sets,
    max_denominator_sets,
    maxden_oracle_diff,
)
from .core.ring import FiniteRing, construct
from .errors import RingLabError
from .ringspec.catalog import catalog_description, catalog_lookup, catalog_names
from .ringspec.emit import emit, emit_catalog, emit_coverage, emit_oracle_diff
from .ringspec.parser import parse_ring_expr
from .ringspec.tables import emit_ring_tables
from .setup_logging import setup_logging
from .theorems import verify_all, verify_catalog, verify_theorem

logger = structlog.get_logger()

FORMAT = click.Choice(["text", "record"])


def load_ring(source: str) -> FiniteRing:
    """Resolve a ring source to a validated ring."""
    text = source.strip()
    if text in catalog_names():
        text = "@" + text
    return construct(parse_ring_expr(text))


def _common_options(f: Callable) -> Callable:
    options = [
        click.option("--max-order", type=int, default=None, help="Largest ring order accepted."),
        click.option("--oracle-max-order", type=int, default=None, help="Largest ring order for exhaustive oracles."),
        click.option("--max-ideals", type=int, default=None, help="Largest ideal count enumerated."),
        click.option("--log-level", default=None, help="structlog level (default from RINGLAB_LOGGING__LEVEL)."),
        click.option("--log-format", type=click.Choice(["console", "json"]), default=None),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _lab_command(f: Callable[..., int]) -> Callable:
    """Apply bounds and logging flags, run the command and turn lab errors into exit codes."""

    @functools.wraps(f)
    def wrapper(*args, max_order, oracle_max_order, max_ideals, log_level, log_format, **kwargs):
        setup_logging(log_level, log_format)
        saved = config.bounds.model_copy()
        try:
            config.override_bounds(max_order=max_order, oracle_max_order=oracle_max_order, max_ideals=max_ideals)
            code = f(*args, **kwargs)
        except RingLabError as exc:
            click.echo(f"error: {exc}", err=True)
            logger.debug("command_failed", error=type(exc).__name__, exit_code=exc.exit_code)
            code = exc.exit_code
        finally:
            config.bounds = saved
        click.get_current_context().exit(code)

    return _common_options(wrapper)


@click.group()
@click.version_option(package_name="ringlab")
def cli() -> None:
    """Finite ring left-localization laboratory."""


@cli.command()
@click.argument("source")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def analyze(source: str, fmt: str) -> int:
    """Print the classification report of a ring."""
    click.echo(emit(classification_report(load_ring(source)), fmt), nl=False)
    return 0


@cli.command()
@click.argument("source")
@click.option("--oracle", is_flag=True, help="Cross-check against the exhaustive denominator search.")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def maxden(source: str, oracle: bool, fmt: str) -> int:
    """Print the maximal left denominator sets of a ring."""
    R = load_ring(source)
    click.echo(emit(max_denominator_sets(R), fmt), nl=False)
    if not oracle:
        return 0
    diff = maxden_oracle_diff(R)
    click.echo(emit_oracle_diff(exhaustive_denominator_sets(R), diff, fmt), nl=False)
    return 1 if diff else 0


@cli.command()
@click.argument("source")
@click.option("--theorem", "theorem_id", default=None, help="Registry id, e.g. thm-26Mar14.")
@click.option("--all", "run_all", is_flag=True, help="Every registry entry.")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def verify(source: str, theorem_id: Optional[str], run_all: bool, fmt: str) -> int:
    """Check registry theorems on a ring."""
    if run_all == (theorem_id is not None):
        raise click.UsageError("give exactly one of --theorem <id> and --all")
    R = load_ring(source)
    verdicts = verify_all(R) if run_all else [verify_theorem(R, theorem_id)]
    click.echo(emit(verdicts, fmt), nl=False)
    return 0 if all(v.passed for v in verdicts) else 1


@cli.command("verify-catalog")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def verify_catalog_command(fmt: str) -> int:
    """Check every registry theorem on every catalog ring, then print coverage."""
    run = verify_catalog()
    for verdicts in run.verdicts.values():
        click.echo(emit(verdicts, fmt), nl=False)
    click.echo(emit_coverage(run.coverage, fmt), nl=False)
    return 0 if run.all_passed else 1


@cli.command()
@click.argument("source")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def oracle(source: str, fmt: str) -> int:
    """Compare the fraction construction with R/ass(S) for every denominator set."""
    R = load_ring(source)
    comparisons = [check_fraction_oracle(R, S) for S in exhaustive_denominator_sets(R)]
    click.echo(emit(comparisons, fmt), nl=False)
    return 0 if all(c.agrees for c in comparisons) else 1


@cli.group()
def catalog() -> None:
    """Built-in rings."""


@catalog.command("list")
@click.option("--format", "fmt", type=FORMAT, default="text", show_default=True)
@_lab_command
def catalog_list(fmt: str) -> int:
    entries = [(name, catalog_lookup(name).render(), catalog_description(name)) for name in catalog_names()]
    click.echo(emit_catalog(entries, fmt), nl=False)
    return 0


@catalog.command("show")
@click.argument("name")
@_lab_command
def catalog_show(name: str) -> int:
    """Print a catalog ring's expression and tables."""
    expr = catalog_lookup(name)
    click.echo(f"# {name}: {catalog_description(name)}")
    click.echo(f"# {expr.render()}")
    click.echo(emit_ring_tables(construct(expr, label=name)), nl=False)
    return 0


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one invocation and return its exit code."""
    try:
        result = cli.main(args=list(argv) if argv is not None else None, prog_name="ringlab", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())
