"""Hot loops, with a numba backend and a pure-numpy fallback.

The backend is chosen by ``EHL_BACKEND`` (``numba`` or ``numpy``); setting
``EHL_DISABLE_NUMBA=1`` forces numpy.  Numba is used when importable.
"""
from __future__ import annotations

import os
from types import SimpleNamespace

from . import _numpy

_NAMES = ("enum_hnf", "smith_exponents", "symplectic_mask", "count_points")


def _load_numba():
    try:
        from . import _numba
    except ImportError:
        return None
    return _numba


def available_backends() -> list[str]:
    out = ["numpy"]
    if _load_numba() is not None:
        out.insert(0, "numba")
    return out


def get(name: str | None = None) -> SimpleNamespace:
    """Kernel namespace for a backend (default: from the environment)."""
    if name is None:
        name = os.environ.get("EHL_BACKEND", "").strip().lower() or None
        if os.environ.get("EHL_DISABLE_NUMBA", "") not in ("", "0"):
            name = "numpy"
    if name is None:
        name = "numba" if _load_numba() is not None else "numpy"
    if name == "numba":
        mod = _load_numba()
        if mod is None:
            raise RuntimeError("numba backend requested but numba is not importable")
    elif name == "numpy":
        mod = _numpy
    else:
        raise ValueError(f"unknown backend {name!r}")
    return SimpleNamespace(name=name, **{k: getattr(mod, k) for k in _NAMES})


def backend_name() -> str:
    return get().name
