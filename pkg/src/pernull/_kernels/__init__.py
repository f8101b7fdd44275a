"""Kernel dispatch.

The package ships two implementations of its hot loops: ``pure`` (Python
ints, no size limits) and ``_core`` (compiled, fixed-width). This module
picks per call, preferring the compiled lane whenever its width and
overflow bounds hold. Both lanes use identical algorithms and scan orders,
so results are bit-identical wherever their domains overlap.

Set ``PERNULL_KERNELS=pure`` to force the fallback (useful to compare), or
``PERNULL_KERNELS=ext`` to fail loudly if the extension did not build.
"""

from __future__ import annotations

import importlib
import os
from typing import Sequence

from . import pure

_core = None
_forced = os.environ.get("PERNULL_KERNELS", "").strip().lower()
if _forced != "pure":
    try:
        _core = importlib.import_module("._core", __name__)
    except ImportError:
        if _forced == "ext":
            raise
        _core = None

COMPILED = _core is not None

# compiled-lane applicability bounds; int128 accumulators cap at 2**127 - 1
_EXT_MAX_N = 62
_EXT_RYSER_MAX_N = 24
_EXT_RYSER_ACC_LIMIT = 1 << 126
_EXT_RYSER_ROWSUM_LIMIT = 1 << 62
_EXT_SACHS_LIMIT = 1 << 126
_EXT_MSTAT_MAX_N = 20
_EXT_CANON_MAX_N = 11


def impl_name() -> str:
    return "ext" if COMPILED else "pure"


def matching_mates(masks: Sequence[int], n: int, sub: int | None = None) -> list[int]:
    if COMPILED and n <= _EXT_MAX_N:
        return _core.matching_mates(masks, n, sub)
    return pure.matching_mates(masks, n, sub)


def matching_size(masks: Sequence[int], n: int, sub: int | None = None) -> int:
    if COMPILED and n <= _EXT_MAX_N:
        return _core.matching_size(masks, n, sub)
    return pure.matching_size(masks, n, sub)


def _ryser_ext_ok(rows: Sequence[Sequence[int]], n: int) -> bool:
    if n > _EXT_RYSER_MAX_N:
        return False
    prod = 1 << n
    for row in rows:
        s = 0
        for a in row:
            s += a if a >= 0 else -a
        if s >= _EXT_RYSER_ROWSUM_LIMIT:
            return False
        prod *= s or 1
    return prod < _EXT_RYSER_ACC_LIMIT


def ryser_permanent(rows: Sequence[Sequence[int]], n: int) -> int:
    if COMPILED and _ryser_ext_ok(rows, n):
        return _core.ryser_permanent(rows, n)
    return pure.ryser_permanent(rows, n)


def _sachs_ext_ok(masks: Sequence[int], n: int) -> bool:
    # every count is at most the number of successor maps, prod(1 + deg)
    if n > _EXT_MAX_N:
        return False
    prod = 1
    for m in masks:
        prod *= 1 + m.bit_count()
    return prod < _EXT_SACHS_LIMIT


def sachs_counts(masks: Sequence[int], n: int) -> list[int]:
    if COMPILED and _sachs_ext_ok(masks, n):
        return _core.sachs_counts(masks, n)
    return pure.sachs_counts(masks, n)


def max_sachs_order(masks: Sequence[int], n: int) -> int:
    if COMPILED and n <= _EXT_MAX_N:
        return _core.max_sachs_order(masks, n)
    return pure.max_sachs_order(masks, n)


def mstat_scan(
    masks: Sequence[int],
    n: int,
    singles_mask: int,
    f_masks: Sequence[int],
) -> tuple[int, int, int, int, int]:
    if COMPILED and n <= _EXT_MSTAT_MAX_N and len(f_masks) <= 32:
        return _core.mstat_scan(masks, n, singles_mask, list(f_masks))
    return pure.mstat_scan(masks, n, singles_mask, f_masks)


def canon_form(masks: Sequence[int], n: int) -> int:
    if COMPILED and n <= _EXT_CANON_MAX_N:
        return _core.canon_form(masks, n)
    return pure.canon_form(masks, n)
