"""Kernel backend selection.

The compiled extension ``gbcomet._kernels`` provides the hot inner loops;
``gbcomet._kernels_py`` is a numpy fallback with the same interface.  The
compiled backend is preferred when importable; set ``GBCOMET_FORCE_FALLBACK=1``
to force the pure-Python path (used by the benchmark and the backend tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

_force_fallback = os.environ.get("GBCOMET_FORCE_FALLBACK", "") not in ("", "0")

if not _force_fallback:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
else:
    _impl = _kernels_py
    BACKEND = "python"

mark_segment = _impl.mark_segment
gp_counts = _impl.gp_counts
li_many = _impl.li_many
simulated_fill = _impl.simulated_fill
pair_estimates = _impl.pair_estimates


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by name (for benchmarks and tests)."""
    mods: dict[str, object] = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]

        mods["compiled"] = _kernels
    except ImportError:
        pass
    return mods
