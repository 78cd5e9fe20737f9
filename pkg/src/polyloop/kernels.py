"""Selects the compiled elimination kernels when available.

Set ``POLYLOOP_PURE=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
reduce_mod_p = _pykernels.reduce_mod_p
reduce_int = _pykernels.reduce_int

if not os.environ.get("POLYLOOP_PURE"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        reduce_mod_p = _ckernels.reduce_mod_p
        reduce_int = _ckernels.reduce_int
        BACKEND = "cython"


def use(backend: str):
    """Switch backends at runtime ("python" or "cython"); used by benchmarks and tests."""
    global reduce_mod_p, reduce_int, BACKEND
    if backend == "python":
        reduce_mod_p = _pykernels.reduce_mod_p
        reduce_int = _pykernels.reduce_int
    elif backend == "cython":
        from . import _ckernels
        reduce_mod_p = _ckernels.reduce_mod_p
        reduce_int = _ckernels.reduce_int
    else:
        raise ValueError(backend)
    BACKEND = backend
