"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module takes over with identical results. Setting ``PISANO_LEGENDRE_PURE=1``
forces the fallback.
"""

import os

from . import _fallback

if os.environ.get("PISANO_LEGENDRE_PURE", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback
        BACKEND = "python"

orbit_counts = _impl.orbit_counts
orbit_period = _impl.orbit_period
first_cordial = _impl.first_cordial


def backends():
    """Return the available backend modules keyed by name."""
    found = {"python": _fallback}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
