"""
Logging configuration for degseidel.

Configured from the environment:
- LOG_LEVEL: DEBUG, INFO, WARNING, ERROR, CRITICAL (default WARNING)
- LOG_FORMAT: simple, detailed, json (default simple)

Standard output carries table, matrix and report payloads, so records from
the package logger are written to standard error only.
"""

import json
import logging
import os
import sys
from datetime import datetime
from typing import Callable, Dict, Optional

PACKAGE_LOGGER = "degseidel"

VALID_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Record attributes set through `extra=` that the JSON formatter keeps
CONTEXT_FIELDS = ("check_id", "status", "comparisons", "kind", "route", "n_max", "size")


class JSONFormatter(logging.Formatter):
    """
    JSON formatter for structured logging.

    One object per record. Suite context passed with ``extra=`` (check id,
    status, table kind, sizes) is collected under ``context``.
    """

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "function": record.funcName,
            "message": record.getMessage(),
        }

        context = {name: getattr(record, name) for name in CONTEXT_FIELDS if hasattr(record, name)}
        if context:
            log_data["context"] = context

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, ensure_ascii=False, default=str)


def _simple_formatter() -> logging.Formatter:
    return logging.Formatter(fmt="%(levelname)s - %(message)s")


def _detailed_formatter() -> logging.Formatter:
    return logging.Formatter(
        fmt="%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


FORMATTERS: Dict[str, Callable[[], logging.Formatter]] = {
    "simple": _simple_formatter,
    "detailed": _detailed_formatter,
    "json": JSONFormatter,
}


def configure_logging(
    level: Optional[str] = None,
    format_style: Optional[str] = None
) -> logging.Logger:
    """
    Attach one standard-error handler to the package logger.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
               Defaults to LOG_LEVEL env var or WARNING.
        format_style: Format style (simple, detailed, json).
                     Defaults to LOG_FORMAT env var or simple.

    Returns:
        The configured ``degseidel`` logger
    """
    log_level = (level or os.getenv("LOG_LEVEL", "WARNING")).strip().upper()
    log_format = (format_style or os.getenv("LOG_FORMAT", "simple")).strip().lower()

    if log_level not in VALID_LEVELS:
        sys.stderr.write(f"Warning: Invalid LOG_LEVEL '{log_level}', defaulting to WARNING\n")
        log_level = "WARNING"
    if log_format not in FORMATTERS:
        sys.stderr.write(f"Warning: Invalid LOG_FORMAT '{log_format}', defaulting to simple\n")
        log_format = "simple"

    package_logger = logging.getLogger(PACKAGE_LOGGER)
    package_logger.setLevel(getattr(logging, log_level))
    for handler in package_logger.handlers[:]:
        package_logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(FORMATTERS[log_format]())
    package_logger.addHandler(handler)
    package_logger.propagate = False

    package_logger.debug(f"Logging configured: level={log_level}, format={log_format}")
    return package_logger
