"""Kernel backend selection.

At import time the compiled Cython kernels are preferred; the pure-Python
twins are the fallback.  Set ``RRSERIES_KERNELS=py`` to force the pure
backend or ``RRSERIES_KERNELS=c`` to insist on the compiled one (raising
if it is not built).
"""

import os

from . import _kernels_py

_forced = os.environ.get("RRSERIES_KERNELS", "").strip().lower()

if _forced in ("py", "python"):
    kernels = _kernels_py
elif _forced in ("c", "cython"):
    from . import _kernels as kernels  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py

mul_trunc = kernels.mul_trunc
invert_trunc = kernels.invert_trunc
binomial_update = kernels.binomial_update
BACKEND_NAME = kernels.BACKEND_NAME
