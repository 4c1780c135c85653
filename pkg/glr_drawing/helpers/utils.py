import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from typing import Any, Callable, Iterator, TypeVar

from glr_drawing.core import config
from glr_drawing.core.exceptions import LayoutDepthError

T = TypeVar("T")

_MIB = 2 ** 20


@contextmanager
def recursion_limit(limit: int) -> Iterator[None]:
    """
    Raise the interpreter recursion limit for the duration of the block, if lower than limit.

    :param limit: the minimum recursion limit to use.
    """
    previous = sys.getrecursionlimit()
    sys.setrecursionlimit(max(previous, limit))
    try:
        yield
    finally:
        sys.setrecursionlimit(previous)


def deep_call(function: Callable[..., T], *args: Any) -> T:
    """
    Call a recursive function in a worker thread whose stack is large enough to reach the
    configured recursion limit, so that deep inputs raise instead of overflowing the C stack.

    :param function: the function to call.
    :param args: its positional arguments.
    :return: the value returned by the function.
    :raises: LayoutDepthError if the recursion goes past the configured limit.
    """
    previous_stack = threading.stack_size(config.LAYOUT_STACK_MIB * _MIB)
    try:
        with recursion_limit(config.LAYOUT_RECURSION_LIMIT), ThreadPoolExecutor(1) as executor:
            future = executor.submit(function, *args)
            try:
                return future.result()
            except RecursionError as error:
                raise LayoutDepthError(
                    f"Recursion went past {config.LAYOUT_RECURSION_LIMIT} frames."
                ) from error
    finally:
        threading.stack_size(previous_stack)


def ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)
