"""Kernel selection: compiled extension when importable, else pure Python.

Set ``MECARD_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKENDS = {"python": _pykernels}

if not os.environ.get("MECARD_PURE_PYTHON"):
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None
    else:
        BACKENDS["cython"] = _ckernels

BACKEND = "cython" if "cython" in BACKENDS else "python"
_impl = BACKENDS[BACKEND]

commuting_orbits = _impl.commuting_orbits
skew_rank_histogram = _impl.skew_rank_histogram
wedge_zero_count = _impl.wedge_zero_count
