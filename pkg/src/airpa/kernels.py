"""Backend selection for the hot kernels.

The compiled extension is preferred; the pure-Python twin is the fallback.
Set AIRPA_PURE_PYTHON=1 to force the fallback (used by the benchmark and the
backend-agreement tests).
"""

from __future__ import annotations

import os

if os.environ.get("AIRPA_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND_NAME

f_value = _impl.f_value
f_grad = _impl.f_grad
es_scan = _impl.es_scan
ga_ascend = _impl.ga_ascend
esmpi_scan = _impl.esmpi_scan
quartic_real_roots = _impl.quartic_real_roots
tte_solve = _impl.tte_solve
