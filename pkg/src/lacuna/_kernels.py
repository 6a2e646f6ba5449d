"""Backend selection for the modular Stirling kernels.

The compiled extension is used when it imports and ``LACUNA_PURE_PYTHON`` is
unset; otherwise the pure-Python module provides the same functions.
"""
from __future__ import annotations

import os

from lacuna import _pykernels

# The C kernels multiply two residues in 64-bit arithmetic and allocate
# factorial tables of size p.
C_PRIME_LIMIT = 1 << 24

try:
    if os.environ.get("LACUNA_PURE_PYTHON"):
        raise ImportError("pure Python kernels forced")
    from lacuna import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"


def _impl(p: int):
    if _ckernels is not None and p < C_PRIME_LIMIT:
        return _ckernels
    return _pykernels


def stirling_row_mod(kind: int, n: int, p: int):
    return _impl(p).stirling_row_mod(kind, n, p)


def stirling1_row_closed_mod(n: int, p: int):
    return _impl(p).stirling1_row_closed_mod(n, p)


def binom_mod_p(n: int, k: int, p: int) -> int:
    if _ckernels is not None and p < C_PRIME_LIMIT and n < (1 << 62):
        return _ckernels.binom_mod_p(n, k, p)
    return _pykernels.binom_mod_p(n, k, p)
