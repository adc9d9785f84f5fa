"""Selects between numba-compiled kernels and their pure numpy/python twins.

Set ``HALIN_PACKER_DISABLE_JIT=1`` before import to force the fallback path.
If numba cannot be imported the fallback is used as well.
"""

import os

_DISABLED = os.environ.get("HALIN_PACKER_DISABLE_JIT", "").strip().lower() in {
    "1",
    "true",
    "yes",
    "on",
}

try:
    if _DISABLED:
        raise ImportError("jit disabled by environment")
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:
    _njit = None
    HAVE_NUMBA = False

USE_JIT = HAVE_NUMBA and not _DISABLED


def maybe_njit(func):
    """Compile ``func`` with numba if available, otherwise return it unchanged."""
    if _njit is None:
        return func
    return _njit(cache=True, nogil=True)(func)
