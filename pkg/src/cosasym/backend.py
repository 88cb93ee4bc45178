"""Backend selection: compiled Cython kernels if available, numpy fallback.

Set COSASYM_BACKEND=python (or =compiled) to force a choice; forcing
"compiled" raises if the extension was not built.
"""

from __future__ import annotations

import os

from . import _kernels_py

_forced = os.environ.get("COSASYM_BACKEND", "").strip().lower()

if _forced == "python":
    _impl = _kernels_py
    BACKEND_NAME = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND_NAME = "compiled"
    except ImportError:
        if _forced == "compiled":
            raise
        _impl = _kernels_py
        BACKEND_NAME = "python"


def get_backend():
    """The active kernel module (compiled extension or numpy fallback)."""
    return _impl


h_partial_sum = _impl.h_partial_sum
kernel_partial_sum = _impl.kernel_partial_sum
lattice_shell_sums = _impl.lattice_shell_sums
lattice_noise_shell_sums = _impl.lattice_noise_shell_sums
