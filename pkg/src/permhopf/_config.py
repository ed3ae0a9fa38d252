"""Process-wide degree guard against factorial blowup."""

import contextlib
import threading

from .errors import DegreeGuardError

DEFAULT_MAX_DEGREE = 8

_lock = threading.Lock()
_max_degree = DEFAULT_MAX_DEGREE


def get_max_degree():
    return _max_degree


def set_max_degree(n):
    global _max_degree
    with _lock:
        _max_degree = int(n)


@contextlib.contextmanager
def max_degree(n):
    """Temporarily raise (or lower) the guard."""
    old = get_max_degree()
    set_max_degree(n)
    try:
        yield
    finally:
        set_max_degree(old)


def check_degree(n):
    if n > _max_degree:
        raise DegreeGuardError(
            f"degree {n} exceeds the guard ({_max_degree}); enumerating S_{n} "
            f"needs an explicit override (--max-degree {n})"
        )
