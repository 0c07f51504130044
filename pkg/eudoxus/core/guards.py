"""Guard context managers for common validation patterns."""

from contextlib import contextmanager
from typing import Callable, Iterator, TypeVar

T = TypeVar("T")


@contextmanager
def raise_if_exhausted_guard(
    exc: Exception,
) -> Iterator[None]:
    """Guard that raises error when a term source runs dry.

    Args:
        exc: Exception to raise instead of the underlying lookup failure

    Yields:
        None

    Raises:
        Exception: If IndexError or StopIteration is raised inside the block

    """
    try:
        yield
    except (IndexError, StopIteration) as err:
        raise exc from err


@contextmanager
def invariant_guard(
    value: T,
    condition: Callable[[T], bool],
    exc: Exception,
) -> Iterator[T]:
    """
    Universal invariant guard with automatic type narrowing.

    Ensures `condition(value)` is False. If True, raises `exc`.
    Yields `value` with narrowed type if condition enables type inference.

    Args:
        value: Any object to guard
        condition: Callable that returns True if invariant is VIOLATED
        exc: Exception to raise on violation

    Yields:
        The original `value`

    Example:
        with invariant_guard(q, lambda d: d < 1, ValidationError("bad denominator")) as den:
            ...
    """
    if condition(value):
        raise exc
    yield value
