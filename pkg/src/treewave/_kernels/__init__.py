"""Kernel backend selection: compiled extension if present, else pure Python.

The compiled kernels only handle graphs with at most 63 vertices (one
word of bitmask); larger inputs silently fall back to the pure versions.
Both backends implement identical algorithms with identical tie-breaks,
so outputs never depend on which one ran.
"""

from __future__ import annotations

from . import pure

try:
    from . import _speedups as _compiled
except ImportError:  # extension not built; pure Python covers everything
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

_WORD_LIMIT = 63


def matching_backend(n_left: int, n_right: int, adj: list[list[int]]) -> list[int]:
    if _compiled is not None:
        return _compiled.max_matching(n_left, n_right, adj)
    return pure.max_matching(n_left, n_right, adj)


def chromatic_backend(n: int, masks: list[int]) -> tuple[int, list[int]]:
    if _compiled is not None and n <= _WORD_LIMIT:
        return _compiled.chromatic_number(n, masks)
    return pure.chromatic_number(n, masks)


def clique_backend(n: int, masks: list[int]) -> int:
    if _compiled is not None and n <= _WORD_LIMIT:
        return _compiled.max_clique(n, masks)
    return pure.max_clique(n, masks)
