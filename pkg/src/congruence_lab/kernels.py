"""Kernel backend selection.

Imports the compiled kernels (``congruence_lab._speedups``) when they were
built, otherwise falls back to the pure-Python twins.  Set the environment
variable ``CONGRUENCE_LAB_PURE=1`` to force the pure kernels even when the
extension is available (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _pykernels

_impl = _pykernels
if os.environ.get("CONGRUENCE_LAB_PURE", "") in ("", "0"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "pure" if _impl is _pykernels else "compiled"

dot2 = _impl.dot2
dot3 = _impl.dot3
power_steps = _impl.power_steps
stirling1_rows = _impl.stirling1_rows
stirling2_rows = _impl.stirling2_rows
eulerian_rows = _impl.eulerian_rows
