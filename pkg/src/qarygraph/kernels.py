"""Backend selection for the hot kernels.

The compiled extension is used when it imports; setting ``QARYGRAPH_PURE=1``
forces the pure-Python implementation.
"""

import os

from . import _kernels_py

if os.environ.get("QARYGRAPH_PURE", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rref_mod = _impl.rref_mod
ExtKernel = _impl.ExtKernel

__all__ = ["BACKEND", "ExtKernel", "rref_mod"]
