"""Kernel backend selection.

The compiled Cython kernels are preferred when the extension was built;
otherwise the pure-numpy fallback is used. Set QPECLASS_BACKEND=python or
=cython to force a choice (the latter raises if the extension is missing).
Both backends produce bit-identical amplitudes, so results never depend on
which one is active.
"""

import os
from contextlib import contextmanager

from . import _kernels_py

_ENV_VAR = "QPECLASS_BACKEND"


def available_backends() -> dict:
    """Name -> kernel module for every backend importable here."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as _kernels_cy

        out["cython"] = _kernels_cy
    except ImportError:
        pass
    return out


def _select():
    forced = os.environ.get(_ENV_VAR, "").strip().lower()
    backends = available_backends()
    if forced:
        if forced not in ("python", "cython"):
            raise ValueError(f"{_ENV_VAR} must be 'python' or 'cython', got {forced!r}")
        if forced not in backends:
            raise ImportError(f"{_ENV_VAR}={forced} but that backend is not available")
        return backends[forced], forced
    if "cython" in backends:
        return backends["cython"], "cython"
    return backends["python"], "python"


kernels, BACKEND_NAME = _select()


@contextmanager
def use(name: str):
    """Temporarily switch the active kernel backend (tests/benchmarks)."""
    global kernels, BACKEND_NAME
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"backend {name!r} not available (have {sorted(backends)})")
    saved = (kernels, BACKEND_NAME)
    kernels, BACKEND_NAME = backends[name], name
    try:
        yield
    finally:
        kernels, BACKEND_NAME = saved
