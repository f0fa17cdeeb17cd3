"""Backend selection for the hot kernels.

Numba is used when it imports cleanly and ``QBINMOD_NO_NUMBA`` is unset (or
``0``).  Setting ``QBINMOD_NO_NUMBA=1`` forces the pure-numpy path, which is
also what runs when numba is missing.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and os.environ.get("QBINMOD_NO_NUMBA", "0").strip() in ("", "0")


def njit(func):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise."""
    if not HAVE_NUMBA:
        return func
    return numba.njit(cache=True, nogil=True)(func)


def backend_name():
    return "numba" if USE_NUMBA else "numpy"
