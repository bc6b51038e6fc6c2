"""Select the compiled kernel module when available.

Set ``HOPFMOD_PURE=1`` to force the pure-Python fallback.
"""

import os

if os.environ.get("HOPFMOD_PURE"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        from . import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
