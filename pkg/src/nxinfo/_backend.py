"""Kernel backend selection.

The compiled extension is preferred. Setting ``NXINFO_PURE_PYTHON=1`` before
import forces the pure-Python kernels.
"""
import os

from . import _pykernels

if os.environ.get("NXINFO_PURE_PYTHON"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"
