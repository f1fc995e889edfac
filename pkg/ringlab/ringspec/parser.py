"""
Ring expression parser.

    expr := "Z" int
          | "M" int "(" expr ")"
          | "T" int "(" expr ")"
          | "P" "(" expr { "," expr } ")"
          | "Q" "(" expr ";" int { "," int } ")"
          | "@" name
          | "table:" path

Whitespace is insignificant between tokens. Errors carry a 1-based offset
and the set of tokens that would have been accepted.
"""

from __future__ import annotations

import string

from pydantic import ValidationError

from ..errors import ParseError
from ..types.expr import Catalog, Matrix, Product, Quotient, RingExpr, Triangular, Zmod
from .tables import load_table_file

_EXPR_START = ("Z", "M", "T", "P", "Q", "@", "table:")
_NAME_CHARS = set(string.ascii_letters + string.digits + "_-")
_PATH_STOP = set(string.whitespace + ",;()")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # --- lexical helpers ---

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _found(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else "end of input"

    def _fail(self, *expected: str) -> ParseError:
        return ParseError(self.pos + 1, expected, self._found())

    def _accept(self, token: str) -> bool:
        self._skip()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def _expect(self, token: str) -> None:
        if not self._accept(token):
            raise self._fail(token)

    def _int(self) -> tuple[int, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self._fail("integer")
        return int(self.text[start:self.pos]), start + 1

    def _build(self, offset: int, model, **fields):
        try:
            return model(**fields)
        except ValidationError as exc:
            raise ParseError(offset, [exc.errors()[0]["msg"]], self.text[offset - 1:self.pos].strip()) from None

    # --- grammar ---

    def parse(self) -> RingExpr:
        expr = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise self._fail("end of input")
        return expr

    def expr(self) -> RingExpr:
        self._skip()
        start = self.pos + 1
        if self._accept("table:"):
            return self._table()
        if self._accept("Z"):
            n, at = self._int()
            return self._build(at, Zmod, n=n)
        for head, model in (("M", Matrix), ("T", Triangular)):
            if self._accept(head):
                k, at = self._int()
                self._expect("(")
                base = self.expr()
                self._expect(")")
                return self._build(at, model, k=k, base=base)
        if self._accept("P"):
            self._expect("(")
            factors = [self.expr()]
            while self._accept(","):
                factors.append(self.expr())
            self._expect_close(",")
            return self._build(start, Product, factors=factors)
        if self._accept("Q"):
            self._expect("(")
            base = self.expr()
            self._expect(";")
            generators = [self._int()[0]]
            while self._accept(","):
                generators.append(self._int()[0])
            self._expect_close(",")
            return self._build(start, Quotient, base=base, generators=generators)
        if self._accept("@"):
            return self._build(start, Catalog, name=self._name())
        raise self._fail(*_EXPR_START)

    def _expect_close(self, separator: str) -> None:
        if not self._accept(")"):
            raise self._fail(separator, ")")

    def _name(self) -> str:
        begin = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CHARS:
            self.pos += 1
        if begin == self.pos:
            raise self._fail("name")
        return self.text[begin:self.pos]

    def _table(self):
        begin = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in _PATH_STOP:
            self.pos += 1
        if begin == self.pos:
            raise self._fail("path")
        return load_table_file(self.text[begin:self.pos])


def parse_ring_expr(text: str) -> RingExpr:
    """Parse a ring expression such as "T 2 (Z 2)" or "P (Z 4, @m2f2)"."""
    return _Parser(text).parse()
