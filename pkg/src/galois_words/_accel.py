"""Lazy loader for the optional compiled kernels.

Importing numba costs over a second, so the kernels module is only pulled
in the first time a caller actually wants it.  Any import failure (numba or
numpy missing, unsupported platform) permanently disables the fast paths
for the process; every caller must handle a None result.
"""

from __future__ import annotations

_kernels = None
_checked = False


def kernels():
    """The compiled kernels module, or None when unavailable."""
    global _kernels, _checked
    if not _checked:
        _checked = True
        try:
            from . import _fast

            _kernels = _fast
        except Exception:
            _kernels = None
    return _kernels
