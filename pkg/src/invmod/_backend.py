"""Kernel selection.

The compiled extension is used when it was built; otherwise the pure
Python kernels are used. Setting ``INVMOD_PURE_PYTHON=1`` forces the
fallback, which is how the benchmark and the parity tests compare both.
"""
import os

from . import _kernels_py

if os.environ.get("INVMOD_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        kernels = _kernels_py
        BACKEND = "python"

convolve = kernels.convolve
axpby = kernels.axpby
scale_by_index = kernels.scale_by_index

__all__ = ["BACKEND", "convolve", "axpby", "scale_by_index"]
