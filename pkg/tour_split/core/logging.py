"""
Structured logging configuration using structlog.

- CI / production: JSON lines (machine-readable, easy to grep across runs)
- Development: pretty console output with colors
- Everything goes to stderr; stdout belongs to command results
"""
import logging
import sys
from contextlib import contextmanager
from typing import Any, Iterator

import structlog

from tour_split.core.config import settings

# Keys holding wall-clock timings; rounded so console output stays readable.
_TIMING_KEYS = ("mean_ms", "median_ms", "stddev_ms", "min_ms", "elapsed_ms", "speedup")


def _round_timings(logger, method_name, event_dict):
    """Structlog processor: round float timings to microsecond precision."""
    for key in _TIMING_KEYS:
        value = event_dict.get(key)
        if isinstance(value, float):
            event_dict[key] = round(value, 3)
    return event_dict


def setup_logging() -> None:
    """Configure structlog and stdlib logging. Call once per process."""
    shared_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        _round_timings,
    ]

    if settings.json_logs:
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer()

    structlog.configure(
        processors=[
            *shared_processors,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    formatter = structlog.stdlib.ProcessorFormatter(
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)

    root = logging.getLogger()
    root.handlers.clear()
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if settings.debug else logging.INFO)


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a named structlog logger."""
    return structlog.get_logger(name)


@contextmanager
def bind_run_context(**fields: Any) -> Iterator[None]:
    """Bind correlation fields (command, seed, instance path) for one CLI run."""
    structlog.contextvars.clear_contextvars()
    structlog.contextvars.bind_contextvars(**fields)
    try:
        yield
    finally:
        structlog.contextvars.clear_contextvars()
