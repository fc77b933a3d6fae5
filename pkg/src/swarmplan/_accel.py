"""Numba acceleration switch.

Hot kernels in :mod:`swarmplan._kernels` are written as njit-compatible
numpy code and compiled when numba is available.  Set ``SWARMPLAN_NUMBA=0``
to force the pure-numpy fallback (same functions, uncompiled); the flag is
read once at import time.  ``benchmarks/bench_kernels.py`` compares the two
paths.
"""

import os

NUMBA_ENABLED = os.environ.get("SWARMPLAN_NUMBA", "1") != "0"

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:
    def _njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


def maybe_njit(*args, **kwargs):
    """``numba.njit`` when enabled, identity decorator otherwise."""
    return _njit(*args, **kwargs)
