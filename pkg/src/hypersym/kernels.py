"""Back-end selection for the hot kernels.

The compiled extension is used when it imports; otherwise (or when
``HYPERSYM_PURE_PYTHON=1``) the numpy implementations take over.
"""

import os

from . import _kernels_py

if os.environ.get("HYPERSYM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl is not _kernels_py else "python"

refine = _impl.refine
permutes_matrix = _impl.permutes_matrix
jacobi_eigh = _impl.jacobi_eigh
