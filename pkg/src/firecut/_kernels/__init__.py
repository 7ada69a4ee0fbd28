"""Backend dispatch for the hot array kernels.

Two interchangeable implementations exist: a numba-jitted one and a pure
numpy one.  Selection:

* environment variable ``FIRECUT_BACKEND`` = ``numba`` | ``python`` | ``auto``
  (default ``auto``: numba when importable, numpy otherwise);
* :func:`set_backend` at runtime (used by the parity tests and benchmarks).

Both backends implement the same four entry points with identical
signatures:

* ``ball_bfs``         -- bounded-depth BFS over a periodic stencil window
* ``complement_scan``  -- classify complement components as pocket/escaped
* ``edmonds_karp``     -- integer max flow by shortest augmenting paths
* ``cut_search``       -- exhaustive cut-system enumeration with bounded
                          containment checks

``ball_bfs``, ``complement_scan`` and ``cut_search`` return bit-identical
results on both backends.  ``edmonds_karp`` returns the same flow value;
the flow assignment and the residual cut may differ (both optimal), which
is why results are validated through the duality check rather than
compared arc by arc.
"""

from __future__ import annotations

import os

from ..errors import FirecutError

_CURRENT = None
_FORCED = os.environ.get("FIRECUT_BACKEND", "auto").strip().lower()


def _load(name: str):
    if name == "python":
        from . import py_impl

        return py_impl
    if name == "numba":
        from . import nb_impl

        return nb_impl
    raise FirecutError(f"unknown kernel backend {name!r}")


def _resolve_auto():
    try:
        return _load("numba")
    except ImportError:
        return _load("python")


def get_backend() -> str:
    global _CURRENT
    if _CURRENT is None:
        if _FORCED in ("auto", ""):
            _CURRENT = _resolve_auto()
        else:
            _CURRENT = _load(_FORCED)
    return _CURRENT.NAME


def set_backend(name: str) -> str:
    """Force a backend (``numba`` or ``python``); returns the active name."""
    global _CURRENT
    _CURRENT = _load(name)
    return _CURRENT.NAME


def _impl():
    get_backend()
    return _CURRENT


def ball_bfs(*args, **kwargs):
    return _impl().ball_bfs(*args, **kwargs)


def complement_scan(*args, **kwargs):
    return _impl().complement_scan(*args, **kwargs)


def edmonds_karp(*args, **kwargs):
    return _impl().edmonds_karp(*args, **kwargs)


def cut_search(*args, **kwargs):
    return _impl().cut_search(*args, **kwargs)
