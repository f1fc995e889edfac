"""
Line-oriented ring table files.

    order n
    one k
    add
    <n lines of n indices>
    mul
    <n lines of n indices>

`#` starts a comment; blank lines are ignored. Element 0 must be zero.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

from pydantic import ValidationError

from ..core.ring.finite_ring import FiniteRing
from ..errors import FormatError
from ..types.expr import Table


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        words = raw.split("#", 1)[0].split()
        if words:
            yield number, words


def _int(word: str, line: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise FormatError(line, f"expected an integer, found {word!r}") from None


def parse_table_text(text: str, source: str = "") -> Table:
    """Parse table-file text into a Table expression."""
    lines = _content_lines(text)
    last = 0

    def next_line(what: str) -> tuple[int, list[str]]:
        nonlocal last
        try:
            last, words = next(lines)
        except StopIteration:
            raise FormatError(last + 1, f"unexpected end of file, expected {what}") from None
        return last, words

    def keyed(key: str) -> int:
        line, words = next_line(f"'{key} <int>'")
        if len(words) != 2 or words[0] != key:
            raise FormatError(line, f"expected '{key} <int>'")
        return _int(words[1], line)

    def table(key: str, n: int) -> list[list[int]]:
        line, words = next_line(f"'{key}'")
        if words != [key]:
            raise FormatError(line, f"expected '{key}'")
        rows = []
        for _ in range(n):
            line, words = next_line(f"a row of {n} indices")
            if len(words) != n:
                raise FormatError(line, f"expected {n} indices, found {len(words)}")
            rows.append([_int(w, line) for w in words])
        return rows

    order = keyed("order")
    if order < 1:
        raise FormatError(last, "order must be positive")
    one = keyed("one")
    add = table("add", order)
    mul = table("mul", order)
    extra = next(lines, None)
    if extra is not None:
        raise FormatError(extra[0], "trailing content after the mul table")

    try:
        return Table(order=order, one=one, add=add, mul=mul, source=source)
    except ValidationError as exc:
        raise FormatError(last, exc.errors()[0]["msg"]) from None


def load_table_file(path: str | Path) -> Table:
    """Read a table file; construct() validates the ring axioms."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(0, f"cannot read {path}: {exc.strerror}") from None
    return parse_table_text(text, source=str(path))


def emit_ring_tables(R: FiniteRing) -> str:
    """Tables of R in the table-file format."""
    out = [f"order {R.order}", f"one {R.one}", "add"]
    out += [" ".join(str(x) for x in row) for row in R.add.tolist()]
    out.append("mul")
    out += [" ".join(str(x) for x in row) for row in R.mul.tolist()]
    return "\n".join(out) + "\n"
