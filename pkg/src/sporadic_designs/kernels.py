"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``SPORADIC_DESIGNS_PURE=1`` to force the fallback.
"""
import os

from . import _kernels_py

if os.environ.get("SPORADIC_DESIGNS_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

compose = _impl.compose
invert = _impl.invert
orbit = _impl.orbit
set_orbit = _impl.set_orbit
pair_coverage = _impl.pair_coverage
pair_orbit_size = _impl.pair_orbit_size
