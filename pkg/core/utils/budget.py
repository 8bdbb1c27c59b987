"""Cooperative time budgets.

Long-running loops call :func:`check_deadline`; when a deadline set through
:func:`deadline_scope` has passed, it raises ``TimeoutExceededError``. The
deadline lives in a context variable, so concurrent bench workers each see
their own.
"""

import time
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

from core.utils.exceptions import ExceptionFactory

_deadline: ContextVar[tuple[float, int] | None] = ContextVar("giventhat_deadline", default=None)


@contextmanager
def deadline_scope(timeout_ms: int | None) -> Iterator[None]:
    """Run the enclosed block under a deadline of ``timeout_ms`` milliseconds.

    ``None`` or a non-positive value disables the deadline for the block.
    """
    if timeout_ms is None or timeout_ms <= 0:
        token = _deadline.set(None)
    else:
        token = _deadline.set((time.monotonic() + timeout_ms / 1000.0, timeout_ms))
    try:
        yield
    finally:
        _deadline.reset(token)


def check_deadline(operation: str = "pipeline") -> None:
    current = _deadline.get()
    if current is not None and time.monotonic() > current[0]:
        raise ExceptionFactory.timeout_exceeded(operation, current[1])


def remaining_ms() -> float | None:
    current = _deadline.get()
    if current is None:
        return None
    return max(0.0, (current[0] - time.monotonic()) * 1000.0)
