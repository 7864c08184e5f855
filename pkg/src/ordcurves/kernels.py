"""Kernel backend selection.

The compiled extension is used when it was built; setting the environment
variable ``ORDCURVES_PURE=1`` forces the pure-Python implementation. Both
backends give identical results, ``BACKEND`` names the active one.
"""

import os

from ordcurves import _pykernels

if os.environ.get("ORDCURVES_PURE"):
    _impl = _pykernels
else:
    try:
        from ordcurves import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

primitive = _impl.primitive
cross = _impl.cross
pair_groups = _impl.pair_groups
echelon = _impl.echelon
nullspace = _impl.nullspace
monomial_rows = _impl.monomial_rows
dot_rows = _impl.dot_rows


def available_backends():
    """Map backend name to module for every backend importable right now."""
    out = {"python": _pykernels}
    try:
        from ordcurves import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
