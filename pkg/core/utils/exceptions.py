"""
Exception hierarchy for the giventhat toolkit.

Errors are grouped into categories so callers can react to a whole family at
once: user input problems (bad LTL text, malformed HOA/KTS files, unknown
strategy names), resource exhaustion (node/state/mark caps, timeouts) and
internal invariant violations.

Example:
    >>> from core.utils.exceptions import LtlSyntaxError, ExceptionFactory
    >>>
    >>> raise LtlSyntaxError("unexpected token", details={"position": 4})
    >>>
    >>> error = ExceptionFactory.state_cap_exceeded("translate", cap=65536)
    >>> raise error
"""

from abc import ABC
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any, TypeVar

# ==============================================================================
# Base Exception
# ==============================================================================


class GivenThatError(Exception, ABC):
    """Base exception for all toolkit errors.

    Attributes:
        message: Human-readable error message
        details: Optional dictionary with additional error context
        category: Exception category (set by subclasses)
    """

    category: str = "general"

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({details_str})"
        return self.message

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(message={self.message!r}, details={self.details!r})"


# ==============================================================================
# Exception Categories (Abstract Base Classes)
# ==============================================================================


class UserInputError(GivenThatError, ABC):
    """Base for errors caused by invalid user input (text formats, names, flags)."""

    category: str = "user_input"


class ResourceError(GivenThatError, ABC):
    """Base for errors raised when a configured budget is exhausted.

    Resource errors are expected at scale: strategies and the bench runner
    catch them and degrade instead of failing the whole run.
    """

    category: str = "resource"


class InternalError(GivenThatError, ABC):
    """Base for violated internal contracts (programming errors)."""

    category: str = "internal"


# ==============================================================================
# User Input Errors
# ==============================================================================


class LtlSyntaxError(UserInputError):
    """Raised by the LTL parser. ``details["position"]`` is the 0-based offset.

    Example:
        >>> raise LtlSyntaxError("expected ')'", details={"position": 7, "text": "F(a & b"})
    """

    @property
    def position(self) -> int:
        return int(self.details.get("position", -1))


class HoaFormatError(UserInputError):
    """Raised for malformed HOA headers or bodies."""


class UnsupportedAcceptanceError(HoaFormatError):
    """Raised when an HOA acceptance condition is not a generalized Büchi Inf-conjunction."""


class KtsFormatError(UserInputError):
    """Raised for malformed KTS system files or dangling state references."""


class FactFileError(UserInputError):
    """Raised when a fact file or bench problem file cannot be read."""


class UnknownStrategyError(UserInputError):
    """Raised when a strategy name is not part of the roster.

    Example:
        >>> raise UnknownStrategyError("unknown strategy", details={"name": "p.foo"})
    """


class ConfigurationError(UserInputError):
    """Raised for invalid settings values."""


class AlphabetMismatchError(UserInputError):
    """Raised when a property mentions atoms the system does not define."""


# ==============================================================================
# Resource Errors
# ==============================================================================


class NodeCapExceededError(ResourceError):
    """A BDD manager grew beyond its node cap."""


class StateCapExceededError(ResourceError):
    """An automaton construction produced more states than allowed."""


class MarkCapExceededError(ResourceError):
    """An automaton would need more acceptance marks than fit in the mark bit set."""


class ComplementCapExceededError(ResourceError):
    """Generic complementation exceeded its state budget."""


class TimeoutExceededError(ResourceError):
    """A cooperative deadline expired."""


# ==============================================================================
# Internal Errors
# ==============================================================================


class UnknownVariableError(InternalError):
    """A variable index or atom name is not registered in the manager."""


class ManagerMismatchError(InternalError):
    """Two Bdd handles from different managers were combined."""


class InvalidIntervalError(InternalError):
    """An ISOP interval whose lower bound does not imply its upper bound."""


class InvariantViolationError(InternalError):
    """A result object failed its own consistency checks."""


# ==============================================================================
# Exception Factory
# ==============================================================================


class ExceptionFactory:
    """Factory for common exceptions with standardized messages."""

    @staticmethod
    def syntax_error(reason: str, text: str, position: int) -> LtlSyntaxError:
        """Create an LtlSyntaxError pointing at ``position`` in ``text``.

        Args:
            reason: What the parser expected or found
            text: Full input text
            position: 0-based character offset

        Returns:
            LtlSyntaxError instance
        """
        return LtlSyntaxError(
            f"LTL syntax error at position {position}: {reason}",
            details={"position": position, "text": text},
        )

    @staticmethod
    def node_cap_exceeded(cap: int) -> NodeCapExceededError:
        return NodeCapExceededError(
            f"BDD node cap exceeded ({cap} nodes)",
            details={"cap": cap},
        )

    @staticmethod
    def state_cap_exceeded(operation: str, cap: int) -> StateCapExceededError:
        """Create a StateCapExceededError.

        Args:
            operation: Construction that hit the cap
            cap: Configured state cap

        Returns:
            StateCapExceededError instance
        """
        return StateCapExceededError(
            f"State cap exceeded in {operation}",
            details={"operation": operation, "cap": cap},
        )

    @staticmethod
    def mark_cap_exceeded(operation: str, needed: int, cap: int) -> MarkCapExceededError:
        return MarkCapExceededError(
            f"Too many acceptance marks in {operation}: {needed} > {cap}",
            details={"operation": operation, "needed": needed, "cap": cap},
        )

    @staticmethod
    def complement_cap_exceeded(states: int, cap: int) -> ComplementCapExceededError:
        return ComplementCapExceededError(
            "Generic complementation exceeded its state budget",
            details={"states": states, "cap": cap},
        )

    @staticmethod
    def timeout_exceeded(operation: str, timeout_ms: int) -> TimeoutExceededError:
        return TimeoutExceededError(
            f"Operation timed out: {operation}",
            details={"operation": operation, "timeout_ms": timeout_ms},
        )

    @staticmethod
    def unknown_strategy(name: str, known: list[str]) -> UnknownStrategyError:
        return UnknownStrategyError(
            f"Unknown strategy: {name}",
            details={"name": name, "known": ", ".join(known)},
        )

    @staticmethod
    def invalid_interval(where: str = "isop") -> InvalidIntervalError:
        return InvalidIntervalError(
            "Lower bound does not imply upper bound",
            details={"where": where},
        )


# ==============================================================================
# Helpers
# ==============================================================================


E = TypeVar("E", bound=GivenThatError)


@contextmanager
def handle_errors(
    *exception_types: type[Exception],
    reraise_as: type[E] | None = None,
    message: str | None = None,
    **details: Any,
) -> Iterator[None]:
    """Context manager converting low-level exceptions into toolkit errors.

    Args:
        *exception_types: Exception types to catch
        reraise_as: Exception type to reraise as
        message: Custom error message
        **details: Additional details for the exception

    Example:
        >>> with handle_errors(OSError, reraise_as=FactFileError, message="cannot read facts"):
        ...     open("missing.txt").read()
    """
    try:
        yield
    except exception_types as e:
        if reraise_as:
            error_message = message or str(e)
            raise reraise_as(error_message, details={"original_error": str(e), **details}) from e
        raise


def get_error_category(error: BaseException) -> str:
    """Return the category of a toolkit error, ``"unknown"`` for foreign exceptions."""
    if isinstance(error, GivenThatError):
        return error.category
    return "unknown"


def is_resource_error(error: BaseException) -> bool:
    return isinstance(error, ResourceError)
