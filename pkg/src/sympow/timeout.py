"""Cooperative deadlines for long computations.

Core loops call `checkpoint()` periodically; when a surrounding `deadline`
context has expired this raises ComputationTimeout.  Single-threaded by
design, so a plain module-level stack is enough.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

from .errors import ComputationTimeout

_stack: list = []


@contextmanager
def deadline(seconds):
    """Bound the wall-clock time of the enclosed computation.

    `seconds` of None or <= 0 disables the check for this scope.
    """
    expires = None
    if seconds is not None and seconds > 0:
        expires = time.monotonic() + seconds
    _stack.append(expires)
    try:
        yield
    finally:
        _stack.pop()


def checkpoint():
    if not _stack:
        return
    expires = _stack[-1]
    if expires is not None and time.monotonic() > expires:
        raise ComputationTimeout("computation exceeded its time limit")
