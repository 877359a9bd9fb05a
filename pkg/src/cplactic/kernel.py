"""Backend selection for the crystal kernel.

The compiled ``_ckernel`` extension is used when it was built; otherwise the
pure-Python ``_pykernel`` takes over.  Set ``CPLACTIC_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernel

if os.environ.get("CPLACTIC_PURE_PYTHON"):
    _impl = _pykernel
else:
    try:
        from . import _ckernel as _impl
    except ImportError:
        _impl = _pykernel

BACKEND = "python" if _impl is _pykernel else "cython"

reduced_signature = _impl.reduced_signature
eps_phi = _impl.eps_phi
apply_f = _impl.apply_f
apply_e = _impl.apply_e
raise_to_highest = _impl.raise_to_highest
lower_along = _impl.lower_along


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    found = {"python": _pykernel}
    try:
        from . import _ckernel
    except ImportError:
        pass
    else:
        found["cython"] = _ckernel
    return found
