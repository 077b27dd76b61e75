"""Backend selection for the Cayley-table kernels.

The compiled Cython extension is preferred; the NumPy implementation is a
drop-in fallback.  Set ``GROUPNUM_CORE=py`` to force the fallback (used by
the benchmark and to debug kernel discrepancies).
"""

import os

from . import pycore

_forced = os.environ.get("GROUPNUM_CORE", "").strip().lower()

if _forced in ("py", "python", "pure"):
    _impl = pycore
    BACKEND = "python"
elif _forced in ("c", "cython", "ext"):
    from . import _ccore as _impl  # noqa: F401  (ImportError here is deliberate)

    BACKEND = "cython"
else:
    try:
        from . import _ccore as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = pycore
        BACKEND = "python"

associativity_defect = _impl.associativity_defect
closure = _impl.closure
is_normal = _impl.is_normal
commutator_set = _impl.commutator_set
