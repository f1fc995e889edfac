"""Configure structured logging for the lab.

Logs go to stderr so that report output on stdout stays byte-identical
between runs. Safe to call more than once; the last call wins.
"""
from __future__ import annotations

import logging
import sys

import structlog
from structlog.contextvars import merge_contextvars

from .config import config


def setup_logging(level: str | None = None, fmt: str | None = None) -> None:
    """Route structlog through the stdlib root logger on stderr."""
    level_name = (level or config.logging.level).upper()
    renderer_name = fmt or config.logging.format
    numeric_level = logging.getLevelName(level_name)
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=numeric_level, force=True)

    renderer = (
        structlog.processors.JSONRenderer(sort_keys=True)
        if renderer_name == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            merge_contextvars,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=False,
    )
