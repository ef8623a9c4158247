"""Hot-loop kernels with a compiled core and a numpy fallback.

The Cython extension is preferred when built; ``SSN_BACKEND=python`` forces
the fallback (used by the benchmark and for debugging).
"""

from __future__ import annotations

import os

from . import pyk

if os.environ.get("SSN_BACKEND", "").lower() in {"py", "python"}:
    _impl = pyk
    BACKEND = "python"
else:
    try:
        from . import ck as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = pyk
        BACKEND = "python"

closure = _impl.closure
product_set = _impl.product_set
conjugate_expand = _impl.conjugate_expand
core_members = _impl.core_members

__all__ = [
    "BACKEND",
    "closure",
    "product_set",
    "conjugate_expand",
    "core_members",
    "pyk",
]
