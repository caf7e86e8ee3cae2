"""Kernel backend selection.

The compiled extension ``kmdecomp._core`` is used when it was built and
``KMDECOMP_PURE_PYTHON`` is unset; otherwise the pure-Python twins in
``kmdecomp._pycore`` run.  ``BACKEND`` names the active choice.
"""

import os

from . import _pycore

if os.environ.get("KMDECOMP_PURE_PYTHON"):
    _impl = _pycore
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _pycore

BACKEND = "python" if _impl is _pycore else "compiled"

jacobi_eigh = _impl.jacobi_eigh
cover_search = _impl.cover_search


def descent_length(w, a):
    if _impl is not _pycore:
        try:
            return _impl.descent_length(w, a)
        except OverflowError:
            pass
    return _pycore.descent_length([list(map(int, row)) for row in w], a)


def backends():
    """Available kernel modules keyed by name (for tests and benchmarks)."""
    out = {"python": _pycore}
    try:
        from . import _core

        out["compiled"] = _core
    except ImportError:
        pass
    return out
