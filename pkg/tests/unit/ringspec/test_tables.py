import pytest

from ringlab.core.ring import construct
from ringlab.errors import FormatError, InvalidTables
from ringlab.ringspec import emit_ring_tables, parse_table_text
from ringlab.types import Catalog

F2_TABLES = """\
# the field with two elements
order 2
one 1
add
0 1
1 0
mul
0 0
0 1
"""


def test_parse_table_text_skips_comments():
    table = parse_table_text(F2_TABLES)
    assert table.order == 2
    assert table.one == 1
    assert table.mul == [[0, 0], [0, 1]]


def test_truncated_file_reports_line():
    text = "order 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n"
    with pytest.raises(FormatError) as exc:
        parse_table_text(text)
    assert exc.value.line == 8


def test_bad_integer_reports_line():
    with pytest.raises(FormatError) as exc:
        parse_table_text("order 2\none x\n")
    assert exc.value.line == 2


def test_short_row_reports_line():
    with pytest.raises(FormatError) as exc:
        parse_table_text("order 2\none 1\nadd\n0 1\n1\n")
    assert exc.value.line == 5


def test_trailing_content():
    with pytest.raises(FormatError):
        parse_table_text(F2_TABLES + "extra\n")


def test_tables_that_are_not_a_ring():
    text = F2_TABLES.replace("0 0\n0 1\n", "0 0\n0 0\n")
    with pytest.raises(InvalidTables):
        construct(parse_table_text(text))


@pytest.mark.parametrize("name", ["z6", "gf4", "t2f2"])
def test_emitted_tables_reload(name):
    R = construct(Catalog(name=name))
    again = construct(parse_table_text(emit_ring_tables(R)))
    assert again.same_tables(R)
