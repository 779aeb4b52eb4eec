"""Backend selection for the exponent-vector kernels.

Imports the compiled extension when present, otherwise the pure-Python
twin.  Set SEMICURVE_PURE_PY=1 to force the pure backend.  The compiled
backend works on int64 buffers, so calls whose inputs carry exponents at
or above ``_COMPILED_EXP_LIMIT`` are routed to the pure backend, which is
exact for arbitrary precision.
"""
from __future__ import annotations

import os

from semicurve import _kernels_py

if os.environ.get("SEMICURVE_PURE_PY"):
    _impl = _kernels_py
else:
    try:
        from semicurve import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

# Exponent sums must stay below 2^63; products add at most two exponents
# per coordinate, so a per-input bound of 2^31 leaves ample headroom.
_COMPILED_EXP_LIMIT = 1 << 31


def _fits(rows):
    if _impl is _kernels_py:
        return True
    return all(e < _COMPILED_EXP_LIMIT for row in rows for e in row)


def minimalize(rows):
    rows = list(rows)
    impl = _impl if _fits(rows) else _kernels_py
    return impl.minimalize(rows)


def pairwise_product(rows_a, rows_b):
    rows_a, rows_b = list(rows_a), list(rows_b)
    impl = _impl if _fits(rows_a) and _fits(rows_b) else _kernels_py
    return impl.pairwise_product(rows_a, rows_b)


def pairwise_lcm(rows_a, rows_b):
    rows_a, rows_b = list(rows_a), list(rows_b)
    impl = _impl if _fits(rows_a) and _fits(rows_b) else _kernels_py
    return impl.pairwise_lcm(rows_a, rows_b)


def colon_by_monomial(rows, g):
    rows = list(rows)
    impl = _impl if _fits(rows) and _fits([g]) else _kernels_py
    return impl.colon_by_monomial(rows, g)


def divides_any(rows, target):
    rows = list(rows)
    impl = _impl if _fits(rows) and _fits([target]) else _kernels_py
    return impl.divides_any(rows, target)


def all_divisible(targets, rows):
    targets, rows = list(targets), list(rows)
    impl = _impl if _fits(targets) and _fits(rows) else _kernels_py
    return impl.all_divisible(targets, rows)
