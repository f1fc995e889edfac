"""
Ring expressions, table files, the built-in catalog and output formats.
"""

from .catalog import catalog_description, catalog_lookup, catalog_names
from .parser import parse_ring_expr
from .tables import emit_ring_tables, load_table_file, parse_table_text

__all__ = [
    "parse_ring_expr",
    "load_table_file",
    "parse_table_text",
    "emit_ring_tables",
    "catalog_lookup",
    "catalog_names",
    "catalog_description",
]
