"""Kernel selection: compiled extension if present, else pure Python.

Set O2ENDO_NO_EXT=1 to force the fallback (used by the benchmark and
by tests that assert the two implementations agree).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("O2ENDO_NO_EXT"):
    _impl = _kernels_py
    USING_EXTENSION = False
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        USING_EXTENSION = True
    except ImportError:
        _impl = _kernels_py
        USING_EXTENSION = False

compose_perm = _impl.compose_perm
invert_perm = _impl.invert_perm
is_identity_perm = _impl.is_identity_perm
pad_suffix_perm = _impl.pad_suffix_perm
shift_prefix_perm = _impl.shift_prefix_perm
cocycle_perm = _impl.cocycle_perm
commutant_labels = _impl.commutant_labels
