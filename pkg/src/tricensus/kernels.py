"""Hot search kernels, compiled when available.

The Cython module ``_kernels`` is used if it imports; otherwise the
pure-Python twin in ``_kernels_py`` is.  Set ``TRICENSUS_PURE_PYTHON=1`` to
force the fallback.  ``BACKEND`` names the active implementation.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("TRICENSUS_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

# the compiled kernels have fixed-width limits; larger inputs use Python
_MAX_COVER_ELEMENTS = 128
_MAX_DISTANCE_IDS = 128
_MAX_CENSUS_ENTRY = 1 << 20


def cover_search(masks, n_elements, limit, node_limit=0, root_single=False,
                 groups=(), group_cap=1, group_touch=1, special=0, *, impl=None):
    mod = impl or (_impl if n_elements <= _MAX_COVER_ELEMENTS else _kernels_py)
    return mod.cover_search(masks, n_elements, limit, node_limit, root_single,
                            groups, group_cap, group_touch, special)


def max_k_distance_subset(dist, k, size_cap=0, node_limit=0, *, impl=None):
    if impl is None:
        top = max((max(row) for row in dist), default=0)
        impl = _impl if top < _MAX_DISTANCE_IDS else _kernels_py
    return impl.max_k_distance_subset(dist, k, size_cap, node_limit)


def census_counts(sq, *, impl=None):
    if impl is None:
        top = max((max(row) for row in sq), default=0)
        impl = _impl if top < _MAX_CENSUS_ENTRY else _kernels_py
    return impl.census_counts(sq)


def implementations():
    """Every importable backend, keyed by name (used by tests and benchmarks)."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
