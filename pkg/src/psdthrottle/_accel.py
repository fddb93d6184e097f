"""JIT switch for the hot kernels.

Kernels are plain Python over ints and numpy arrays. They are compiled with
``numba.njit`` unless ``PSDTHROTTLE_DISABLE_JIT`` is set to a truthy value, in
which case the same source runs in the interpreter (slow, but identical
results; useful for debugging and for benchmarking the speedup).
"""
from __future__ import annotations

import os

_FLAG = "PSDTHROTTLE_DISABLE_JIT"

JIT_ENABLED = os.environ.get(_FLAG, "").strip().lower() not in ("1", "true", "yes", "on")

if JIT_ENABLED:
    try:
        import numba
    except ImportError:  # pragma: no cover
        JIT_ENABLED = False

if JIT_ENABLED:

    def kernel(fn):
        return numba.njit(cache=True)(fn)

else:

    def kernel(fn):
        return fn
