"""Backend selection for the training hot loop.

Prefers the compiled extension, falls back to the pure-Python twin when the
build is unavailable. Set KBCAT_PURE_PYTHON=1 to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("KBCAT_PURE_PYTHON") == "1":
    _impl = _pykernels
    _BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        _BACKEND = "c"
    except ImportError:
        _impl = _pykernels
        _BACKEND = "python"

dcd_train = _impl.dcd_train


def backend_name():
    """Return "c" when the compiled kernels are active, else "python"."""
    return _BACKEND
