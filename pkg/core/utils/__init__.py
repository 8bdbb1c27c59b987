"""
Shared utilities: exceptions, structured logging and cooperative deadlines.

Example:
    >>> from core.utils import get_logger, setup_logging
    >>>
    >>> setup_logging(level="INFO")
    >>> logger = get_logger(__name__)
    >>> logger.info("bench.start", problems=20)
"""

from core.utils.budget import check_deadline, deadline_scope, remaining_ms
from core.utils.exceptions import (
    AlphabetMismatchError,
    ComplementCapExceededError,
    ConfigurationError,
    ExceptionFactory,
    FactFileError,
    GivenThatError,
    HoaFormatError,
    InternalError,
    InvalidIntervalError,
    InvariantViolationError,
    KtsFormatError,
    LtlSyntaxError,
    ManagerMismatchError,
    MarkCapExceededError,
    NodeCapExceededError,
    ResourceError,
    StateCapExceededError,
    TimeoutExceededError,
    UnknownStrategyError,
    UnknownVariableError,
    UnsupportedAcceptanceError,
    UserInputError,
    get_error_category,
    handle_errors,
    is_resource_error,
)
from core.utils.logging import (
    BoundLogger,
    LogContext,
    LoggerConfig,
    LoggerFactory,
    bind_context,
    clear_context,
    get_logger,
    setup_logging,
)

__all__ = [
    "AlphabetMismatchError",
    "BoundLogger",
    "ComplementCapExceededError",
    "ConfigurationError",
    "ExceptionFactory",
    "FactFileError",
    "GivenThatError",
    "HoaFormatError",
    "InternalError",
    "InvalidIntervalError",
    "InvariantViolationError",
    "KtsFormatError",
    "LogContext",
    "LoggerConfig",
    "LoggerFactory",
    "LtlSyntaxError",
    "ManagerMismatchError",
    "MarkCapExceededError",
    "NodeCapExceededError",
    "ResourceError",
    "StateCapExceededError",
    "TimeoutExceededError",
    "UnknownStrategyError",
    "UnknownVariableError",
    "UnsupportedAcceptanceError",
    "UserInputError",
    "bind_context",
    "check_deadline",
    "clear_context",
    "deadline_scope",
    "get_error_category",
    "get_logger",
    "handle_errors",
    "is_resource_error",
    "remaining_ms",
    "setup_logging",
]
