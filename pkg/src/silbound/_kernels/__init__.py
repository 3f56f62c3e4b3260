"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is used when it is
missing or when ``SILBOUND_PURE`` is set in the environment.  Both expose the
same two functions with identical semantics.
"""

import os

if os.environ.get("SILBOUND_PURE"):
    from . import _python as _impl

    BACKEND = "python"
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        from . import _python as _impl

        BACKEND = "python"

silhouette_parts = _impl.silhouette_parts
bound_scan = _impl.bound_scan


def backend():
    """Name of the active kernel backend, 'native' or 'python'."""
    return BACKEND
