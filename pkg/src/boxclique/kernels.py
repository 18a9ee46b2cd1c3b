"""Kernel selection: the compiled ``_kernels`` when available, else ``_pure``.

Set ``BOXCLIQUE_PURE=1`` to force the pure-Python kernels.
"""
from __future__ import annotations

import os

from . import _pure

BACKEND = "pure"
if os.environ.get("BOXCLIQUE_PURE", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _impl = _pure

enumerate_profiles = _impl.enumerate_profiles
solve_triple = _impl.solve_triple
flat_search = _impl.flat_search

__all__ = ["BACKEND", "enumerate_profiles", "solve_triple", "flat_search"]
