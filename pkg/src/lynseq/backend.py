"""Kernel backend selection.

The brute-force enumeration kernels exist twice: a numba-jitted version
(`_kernels_numba`) and a pure-Python reference (`_pykernels`).  Which one
runs is controlled by the LYNSEQ_BACKEND environment variable:

    auto    use numba when importable, else pure Python (default)
    numba   require the jitted kernels (ImportError if numba is missing)
    python  force the pure-Python reference

Both backends produce bit-identical results; `benchmarks/bench_backends.py`
compares their speed.
"""
from __future__ import annotations

import os

ENV_VAR = "LYNSEQ_BACKEND"

_active = None


def kernels():
    """Return the active kernel module, resolving the env flag on first use."""
    global _active
    if _active is None:
        choice = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
        _active = _load(choice)
    return _active


def _load(choice: str):
    if choice == "python":
        from . import _pykernels

        return _pykernels
    if choice == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if choice == "auto":
        try:
            from . import _kernels_numba

            return _kernels_numba
        except ImportError:
            from . import _pykernels

            return _pykernels
    raise ValueError(f"unknown {ENV_VAR} value {choice!r}; expected auto, numba or python")


def backend_name() -> str:
    return kernels().BACKEND_NAME


def reset() -> None:
    """Forget the resolved backend so the env flag is re-read (test hook)."""
    global _active
    _active = None


def encoding_fits(sigma: int, n: int) -> bool:
    """Whether the jitted distinct-counters' base-(sigma+1) int64 encoding is
    collision-free for words of length n."""
    return (sigma + 1) ** max(n, 1) < 2**63


def distinct_kernels(sigma: int, n: int):
    """Kernels safe for distinct counting at this size: falls back to the
    pure backend when the int64 encoding would overflow."""
    mod = kernels()
    if mod.BACKEND_NAME == "numba" and not encoding_fits(sigma, n):
        from . import _pykernels

        return _pykernels
    return mod
