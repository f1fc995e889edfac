"""
Serialization of reports, profiles, verdicts and oracle runs.

Two formats:
- "record": one `key = value` per line, subsets as sorted brace lists;
- "text": rich tables rendered without colour at a fixed width.
Both are byte-deterministic for a fixed input.
"""

from __future__ import annotations

import io
from typing import Any, Iterable, Literal, Sequence

from rich.console import Console
from rich.table import Table
from rich.text import Text

from ..core.localization.records import MaxDenProfile, OracleComparison
from ..theorems.verify import CoverageRow
from ..types.report import Report, Verdict
from ..types.subset import Subset

Format = Literal["text", "record"]

TEXT_WIDTH = 110


def _value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Subset):
        return v.render()
    if v is None:
        return "none"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_value(x) for x in v) + "]"
    return str(v)


def _records(pairs: Iterable[tuple[str, Any]]) -> str:
    return "".join(f"{key} = {_value(value)}\n" for key, value in pairs)


def _render(*renderables) -> str:
    buffer = io.StringIO()
    console = Console(
        file=buffer,
        width=TEXT_WIDTH,
        color_system=None,
        force_terminal=False,
        highlight=False,
        emoji=False,
        soft_wrap=False,
    )
    for item in renderables:
        console.print(item)
    return buffer.getvalue()


def _table(title: str, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> Table:
    table = Table(title=Text(title), title_justify="left", show_lines=False)
    for column in columns:
        table.add_column(column, overflow="fold")
    for row in rows:
        table.add_row(*(Text(_value(x)) for x in row))
    return table


# --- reports ---

def _report_pairs(r: Report) -> list[tuple[str, Any]]:
    pairs: list[tuple[str, Any]] = [
        ("ring.label", r.label),
        ("ring.order", r.order),
        ("ring.units", r.units_count),
        ("ring.nilpotents", r.nilpotents),
        ("ring.nil_radical", r.nil_radical),
        ("ring.jacobson_radical", r.jacobson_radical),
        ("ring.ideals", r.ideals_count),
        ("ring.local", r.local),
        ("ring.semilocal", r.semilocal),
        ("decomp.count", len(r.decomposition)),
    ]
    for i, factor in enumerate(r.decomposition, start=1):
        pairs += [
            (f"decomp.{i}.idempotent", factor.idempotent),
            (f"decomp.{i}.order", factor.order),
            (f"decomp.{i}.local", factor.local),
        ]
    pairs.append(("maxden.count", r.maxden_count))
    for i, den in enumerate(r.maxden, start=1):
        pairs += [(f"maxden.{i}.S", den.S), (f"maxden.{i}.ass", den.ass), (f"maxden.{i}.core", den.core)]
    pairs += [
        ("ll", r.ll_radical),
        ("localizable", r.localizable),
        ("localizable.count", len(r.localizable)),
        ("completely_localizable", r.completely_localizable),
        ("completely_localizable.count", len(r.completely_localizable)),
        ("non_localizable", r.non_localizable),
        ("class.lloc", r.left_localizable),
        ("class.wll", r.weakly_left_localizable),
        ("class.lmax", r.left_localization_maximal),
    ]
    if r.witness_lloc is not None:
        pairs.append(("class.lloc.witness", r.witness_lloc))
    if r.witness_wll is not None:
        pairs.append(("class.wll.witness", r.witness_wll))
    return pairs


def _report_text(r: Report) -> str:
    summary = _table(
        f"{r.label} (order {r.order})",
        ["property", "value"],
        [
            ("units", r.units_count),
            ("nilpotents", r.nilpotents),
            ("nil radical", r.nil_radical),
            ("Jacobson radical", r.jacobson_radical),
            ("ideals", r.ideals_count),
            ("local", r.local),
            ("ll radical", r.ll_radical),
            ("localizable", f"{len(r.localizable)} {r.localizable.render()}"),
            ("completely localizable", f"{len(r.completely_localizable)} {r.completely_localizable.render()}"),
            ("left localizable", r.left_localizable),
            ("weakly left localizable", r.weakly_left_localizable),
            ("left localization maximal", r.left_localization_maximal),
        ],
    )
    decomposition = _table(
        "central decomposition", ["idempotent", "order", "local"],
        [(f.idempotent, f.order, f.local) for f in r.decomposition],
    )
    maxden = _table(
        "maximal left denominator sets", ["#", "S", "ass", "core"],
        [(i, d.S, d.ass, d.core) for i, d in enumerate(r.maxden, start=1)],
    )
    return _render(summary, decomposition, maxden)


# --- profiles ---

def _profile_pairs(p: MaxDenProfile) -> list[tuple[str, Any]]:
    pairs: list[tuple[str, Any]] = [("ring.label", p.ring.label), ("maxden.count", len(p.records))]
    for i, rec in enumerate(p.records, start=1):
        pairs += [
            (f"maxden.{i}.S", rec.S),
            (f"maxden.{i}.ass", rec.ass),
            (f"maxden.{i}.core", rec.core),
            (f"maxden.{i}.saturated", rec.saturated),
            (f"maxden.{i}.localization.order", rec.quotient.order),
        ]
    pairs += [
        ("ll", p.ll_radical),
        ("localizable", p.localizable),
        ("completely_localizable", p.completely_localizable),
        ("localizable_ideals.count", len(p.localizable_ideals)),
    ]
    return pairs


def _profile_text(p: MaxDenProfile) -> str:
    table = _table(
        f"maxDen of {p.ring.label}",
        ["#", "S", "ass", "core", "S^-1 R order"],
        [(i, r.S, r.ass, r.core, r.quotient.order) for i, r in enumerate(p.records, start=1)],
    )
    derived = _table(
        "derived sets",
        ["set", "members"],
        [
            ("ll radical", p.ll_radical),
            ("localizable", p.localizable),
            ("completely localizable", p.completely_localizable),
            ("localizable ideals", len(p.localizable_ideals)),
        ],
    )
    return _render(table, derived)


# --- verdicts ---

def _verdict_pairs(verdicts: Sequence[Verdict]) -> list[tuple[str, Any]]:
    pairs: list[tuple[str, Any]] = []
    for v in verdicts:
        pairs += [
            (f"{v.id}.applicable", v.applicable),
            (f"{v.id}.lhs", v.lhs),
            (f"{v.id}.rhs", v.rhs),
            (f"{v.id}.pass", v.passed),
        ]
        for i, w in enumerate(v.witnesses, start=1):
            pairs.append((f"{v.id}.witness.{i}", f"{w.condition}: {w.value}"))
    return pairs


def _verdict_text(verdicts: Sequence[Verdict]) -> str:
    if not verdicts:
        return ""
    rows = []
    for v in verdicts:
        result = "pass" if v.passed else "FAIL"
        rows.append((v.id, v.kind, v.applicable, v.lhs, v.rhs, result))
    title = f"theorem verdicts on {verdicts[0].ring}"
    return _render(_table(title, ["theorem", "kind", "applicable", "lhs", "rhs", "result"], rows))


# --- oracle comparisons ---

def _oracle_pairs(comparisons: Sequence[OracleComparison]) -> list[tuple[str, Any]]:
    pairs: list[tuple[str, Any]] = []
    for i, c in enumerate(comparisons, start=1):
        pairs += [
            (f"oracle.{i}.S", c.S),
            (f"oracle.{i}.fraction.order", c.fraction_order),
            (f"oracle.{i}.localization.order", c.localization_order),
            (f"oracle.{i}.well_defined", c.well_defined),
            (f"oracle.{i}.bijective", c.bijective),
            (f"oracle.{i}.additive", c.additive),
            (f"oracle.{i}.multiplicative", c.multiplicative),
            (f"oracle.{i}.agrees", c.agrees),
        ]
    return pairs


def _oracle_text(comparisons: Sequence[OracleComparison]) -> str:
    if not comparisons:
        return ""
    rows = [
        (c.S, c.fraction_order, c.localization_order, c.well_defined, c.bijective, c.additive, c.multiplicative)
        for c in comparisons
    ]
    columns = ["S", "fractions", "R/ass(S)", "well defined", "bijective", "additive", "multiplicative"]
    return _render(_table(f"fraction oracle on {comparisons[0].ring}", columns, rows))


# --- public API ---

def emit(obj: Report | MaxDenProfile | Sequence[Verdict] | Sequence[OracleComparison], fmt: Format = "text") -> str:
    """Serialize a report, a maxDen profile, a verdict list or an oracle comparison list."""
    if isinstance(obj, Report):
        return _records(_report_pairs(obj)) if fmt == "record" else _report_text(obj)
    if isinstance(obj, MaxDenProfile):
        return _records(_profile_pairs(obj)) if fmt == "record" else _profile_text(obj)
    items = list(obj)
    if items and isinstance(items[0], OracleComparison):
        return _records(_oracle_pairs(items)) if fmt == "record" else _oracle_text(items)
    if all(isinstance(v, Verdict) for v in items):
        return _records(_verdict_pairs(items)) if fmt == "record" else _verdict_text(items)
    raise TypeError(f"cannot emit {type(obj).__name__}")


def emit_oracle_diff(exhaustive: Sequence[Subset], diff: Sequence[Subset], fmt: Format = "text") -> str:
    """The exhaustive denominator sets and their disagreement with the saturation answer."""
    if fmt == "record":
        return _records(
            [
                ("oracle.exhaustive.count", len(exhaustive)),
                ("oracle.exhaustive", list(exhaustive)),
                ("oracle.diff.count", len(diff)),
                ("oracle.diff", list(diff)),
            ]
        )
    rows = [(S, "differs" if S in diff else "") for S in exhaustive]
    rows += [(S, "saturation only") for S in diff if S not in exhaustive]
    return _render(_table(f"exhaustive denominator sets ({len(exhaustive)}), diff {len(diff)}", ["S", "note"], rows))


def emit_coverage(rows: Sequence[CoverageRow], fmt: Format = "text") -> str:
    if fmt == "record":
        pairs: list[tuple[str, Any]] = []
        for row in rows:
            pairs += [
                (f"coverage.{row.id}.both_true", row.both_true),
                (f"coverage.{row.id}.both_false", row.both_false),
                (f"coverage.{row.id}.vacuous", row.vacuous),
                (f"coverage.{row.id}.failed", row.failed),
                (f"coverage.{row.id}.covered", row.covered),
            ]
        return _records(pairs)
    table = _table(
        "coverage",
        ["theorem", "kind", "both true", "both false", "vacuous", "failed", "covered"],
        [(r.id, r.kind, r.both_true, r.both_false, r.vacuous, r.failed, r.covered) for r in rows],
    )
    return _render(table)


def emit_catalog(entries: Sequence[tuple[str, str, str]], fmt: Format = "text") -> str:
    """(name, expression, description) triples."""
    if fmt == "record":
        return _records((f"catalog.{name}", expr) for name, expr, _ in entries)
    return _render(_table("catalog", ["name", "expression", "description"], entries))
