"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
twin. Both expose ``find_coloring``, ``min_max_component`` and
``treewidth_dp`` with identical results.
"""
from __future__ import annotations

from types import ModuleType

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _compiled is not None:
    BACKENDS["cython"] = _compiled

DEFAULT = "cython" if _compiled is not None else "python"


def _fits(mod: ModuleType, n: int, k: int, dp: bool) -> bool:
    caps = [(mod.MAX_DP_VERTICES, n)] if dp else [(mod.MAX_VERTICES, n), (mod.MAX_COLORS, k)]
    return all(cap is None or value <= cap for cap, value in caps)


def get(name: str | None = None, n: int = 0, k: int = 0, dp: bool = False) -> ModuleType:
    """Backend ``name``; with no name, the default one unless the instance
    (``n`` vertices, ``k`` colours, subset DP if ``dp``) exceeds its fixed
    capacity, in which case the pure-Python kernels take over."""
    if name is None:
        name = DEFAULT if _fits(BACKENDS[DEFAULT], n, k, dp) else "python"
    try:
        return BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} unavailable; have {sorted(BACKENDS)}") from None
