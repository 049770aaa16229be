"""Kernel backend selection.

The compiled extension is preferred when it is importable and the input
fits 64-bit accumulation; otherwise the pure-Python lane is used.  Both
lanes implement the same scan contract (see ``_kernels_py``).
"""

from __future__ import annotations

from typing import Sequence

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_COMPILED = _compiled is not None

#: names accepted by the ``backend=`` keyword of the deciders
BACKEND_NAMES = ("auto", "compiled", "python")

_INT64_GUARD = 2**62


def backend_name() -> str:
    """Name of the lane that ``auto`` resolves to for ordinary inputs."""
    return "compiled" if HAVE_COMPILED else "python"


def fits_compiled(a: Sequence[int], b: Sequence[int]) -> bool:
    """True when every accumulation over (a, b) fits in 64 bits.

    Conservative: sums are bounded by ``n * max(b)`` and slacks by an
    additional ``n**2`` term.
    """
    n = len(a)
    mb = max(b) if n else 0
    return n * (mb + n + 2) < _INT64_GUARD


def select(a: Sequence[int], b: Sequence[int], backend: str = "auto"):
    """Return the kernel module to run a scan over ``(a, b)``."""
    if backend == "python":
        return _kernels_py
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError(
                "compiled kernels are not available; build the extension or "
                "pass backend='python'"
            )
        return _compiled
    if backend != "auto":
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKEND_NAMES}")
    if _compiled is not None and fits_compiled(a, b):
        return _compiled
    return _kernels_py
