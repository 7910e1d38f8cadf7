"""Logging configuration for the split cubic toolkit."""
from __future__ import annotations

import logging
import logging.config
import time
from functools import wraps
from typing import Any, Callable, Dict, Optional, TypeVar

import structlog

from .config import settings

F = TypeVar("F", bound=Callable[..., Any])


def setup_logging(level: Optional[str] = None, log_format: Optional[str] = None) -> None:
    """Configure logging for the application.

    Diagnostics always go to standard error; standard output carries reports only.
    """
    level = (level or settings.log_level).upper()
    log_format = log_format or settings.log_format

    renderer = (
        structlog.processors.JSONRenderer()
        if log_format == "json"
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    shared_processors = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
    ]

    config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "structured": {
                "()": structlog.stdlib.ProcessorFormatter,
                "processor": renderer,
                "foreign_pre_chain": shared_processors,
            }
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "structured",
                "stream": "ext://sys.stderr",
            }
        },
        "loggers": {
            "": {"handlers": ["console"], "level": "WARNING", "propagate": False},
            "splitcubic": {"handlers": ["console"], "level": level, "propagate": False},
        },
    }
    logging.config.dictConfig(config)

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            *shared_processors,
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a structured logger under the application namespace."""
    return structlog.get_logger(f"splitcubic.{name}")


class LoggerMixin:
    """Mixin class to add logging capability to any class."""

    @property
    def logger(self) -> structlog.stdlib.BoundLogger:
        return get_logger(self.__class__.__name__.lower())


def log_performance(name: Optional[str] = None, level: int = logging.INFO) -> Callable[[F], F]:
    """Decorator to log function execution time."""

    def decorator(func: F) -> F:
        function_logger = get_logger(name or func.__module__)

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                function_logger.error(
                    "computation_failed",
                    function=func.__name__,
                    seconds=round(time.perf_counter() - start_time, 3),
                    error=str(e),
                )
                raise
            function_logger.log(
                level,
                "computation_finished",
                function=func.__name__,
                seconds=round(time.perf_counter() - start_time, 3),
            )
            return result

        return wrapper  # type: ignore[return-value]

    return decorator
