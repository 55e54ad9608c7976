"""Hot-loop kernels, compiled when available.

The Cython module ``_ckernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` fallback is imported. Setting the environment
variable ``GAMMA2_PURE_PYTHON=1`` forces the fallback.
"""
import os

from gamma2 import _pykernels

if os.environ.get("GAMMA2_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from gamma2 import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

reduce_letters = _impl.reduce_letters
matmul = _impl.matmul


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    found = {"python": _pykernels}
    try:
        from gamma2 import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
