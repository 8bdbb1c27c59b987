"""
Structured logging configuration using structlog.

Logs go to stderr so that command output on stdout (HOA text, CSV rows,
JSON reports) stays machine-readable.

Example:
    >>> from core.utils.logging import get_logger, setup_logging
    >>>
    >>> setup_logging(level="DEBUG", json_logs=False)
    >>> logger = get_logger(__name__)
    >>> logger.debug("translate.done", states=3, marks=2)
"""

import logging
import sys
from dataclasses import dataclass
from typing import Any

import structlog
from structlog.types import EventDict, Processor

# ==============================================================================
# Configuration
# ==============================================================================


@dataclass(frozen=True)
class LoggerConfig:
    """Configuration for logger setup.

    Attributes:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_logs: If True, output JSON lines; otherwise console format
        app_name: Application name added to every event
        use_colors: Enable colored console output
    """

    level: str = "WARNING"
    json_logs: bool = False
    app_name: str = "giventhat"
    use_colors: bool = True

    def __post_init__(self) -> None:
        allowed_levels = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if self.level.upper() not in allowed_levels:
            raise ValueError(f"Invalid log level: {self.level}. Must be one of {allowed_levels}")

    @property
    def numeric_level(self) -> int:
        return getattr(logging, self.level.upper(), logging.WARNING)


# ==============================================================================
# Processor Factory
# ==============================================================================


class ProcessorBuilder:
    """Builds the structlog processor chain for a configuration."""

    def __init__(self, config: LoggerConfig):
        self.config = config

    def build(self) -> list[Processor]:
        processors: list[Processor] = [
            structlog.stdlib.filter_by_level,
            structlog.contextvars.merge_contextvars,
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            self._create_app_context_processor(),
        ]
        if self.config.json_logs:
            processors.append(structlog.processors.format_exc_info)
            processors.append(structlog.processors.JSONRenderer())
        else:
            processors.append(structlog.dev.ConsoleRenderer(colors=self.config.use_colors))
        return processors

    def _create_app_context_processor(self) -> Processor:
        app_name = self.config.app_name

        def add_app_context(logger: Any, method_name: str, event_dict: EventDict) -> EventDict:
            event_dict["app"] = app_name
            return event_dict

        return add_app_context


# ==============================================================================
# Logger Factory
# ==============================================================================


class LoggerFactory:
    """Configures the logging system once and hands out loggers.

    Example:
        >>> factory = LoggerFactory(LoggerConfig(level="DEBUG"))
        >>> factory.configure()
        >>> logger = factory.get_logger(__name__)
    """

    _configured: bool = False

    def __init__(self, config: LoggerConfig):
        self.config = config

    def configure(self) -> None:
        """Configure stdlib logging and structlog with this factory's config."""
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root = logging.getLogger()
        for existing in list(root.handlers):
            if getattr(existing, "_giventhat", False):
                root.removeHandler(existing)
        handler._giventhat = True  # type: ignore[attr-defined]
        root.addHandler(handler)
        root.setLevel(self.config.numeric_level)

        structlog.configure(
            processors=ProcessorBuilder(self.config).build(),
            wrapper_class=structlog.stdlib.BoundLogger,
            context_class=dict,
            logger_factory=structlog.stdlib.LoggerFactory(),
            cache_logger_on_first_use=False,
        )

        LoggerFactory._configured = True

    @staticmethod
    def get_logger(name: str) -> structlog.stdlib.BoundLogger:
        """Return a logger, configuring defaults on first use."""
        if not LoggerFactory._configured:
            LoggerFactory(LoggerConfig()).configure()
        return structlog.get_logger(name)


# ==============================================================================
# Context Management
# ==============================================================================


class LogContext:
    """Bind contextual keys (problem id, strategy) for the duration of a block.

    Example:
        >>> with LogContext(problem="p07", strategy="BM"):
        ...     logger.info("strategy.start")
    """

    def __init__(self, **kwargs: Any):
        self.context = kwargs

    def __enter__(self) -> "LogContext":
        structlog.contextvars.bind_contextvars(**self.context)
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        structlog.contextvars.unbind_contextvars(*self.context)


# ==============================================================================
# Public API (Functional Interface)
# ==============================================================================


def setup_logging(level: str = "WARNING", json_logs: bool = False, app_name: str = "giventhat") -> None:
    """Configure structured logging for the application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_logs: If True, output logs in JSON format
        app_name: Application name to include in logs
    """
    LoggerFactory(LoggerConfig(level=level, json_logs=json_logs, app_name=app_name)).configure()


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a logger instance for the given name.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured structlog logger
    """
    return LoggerFactory.get_logger(name)


def bind_context(**kwargs: Any) -> None:
    """Bind context variables for all subsequent log entries of this context."""
    structlog.contextvars.bind_contextvars(**kwargs)


def clear_context() -> None:
    structlog.contextvars.clear_contextvars()


BoundLogger = structlog.stdlib.BoundLogger
