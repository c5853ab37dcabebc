"""Backend selection for the monomial kernels.

The compiled extension is used when it imports; set ``SUPERHEAP_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

import os

from . import _pykernel

BACKEND = "python"

if not os.environ.get("SUPERHEAP_PURE_PYTHON"):
    try:
        from . import _ckernel as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernel
else:
    _impl = _pykernel

reorder_sign = _impl.reorder_sign
mul_terms = _impl.mul_terms
add_terms = _impl.add_terms

__all__ = ["BACKEND", "reorder_sign", "mul_terms", "add_terms"]
