"""Hot kernels for contour integration of catalog fields.

The compiled extension is used when it was built; otherwise the pure-Python
module with the identical API is selected. ``get_backend(name)`` returns a
specific one for testing and benchmarking.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels

default = _ckernels if _ckernels is not None else _pykernels
BACKEND = default.BACKEND


def get_backend(name: str | None = None):
    """Kernel module by name; ``None`` gives the import-time default."""
    if name is None:
        return default
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"kernel backend {name!r} is not available; have {sorted(BACKENDS)}"
        ) from None


def available() -> list[str]:
    return sorted(BACKENDS)
