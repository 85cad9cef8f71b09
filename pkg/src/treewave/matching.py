"""Maximum matching in bipartite graphs, plus a brute-force test oracle.

The matching engine drives the color-reuse step of the greedy colorer
and the per-edge lower bound.  The brute-force oracle is deliberately
kept as an independent second route (exhaustive search, no shared code
with the kernels) so the two can certify each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import matching_backend
from .conflict import BipartiteGraph
from .instances import LimitError

BRUTE_FORCE_GUARD = 24


@dataclass(frozen=True)
class Matching:
    """Pairs of (left position, right position); each position used once."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)


def max_bipartite_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching by augmenting paths.

    Deterministic: left positions are processed in ascending order and
    neighbors in ascending right position.
    """
    adj: list[list[int]] = [[] for _ in range(len(g.left))]
    for lp, rp in sorted(g.edges):
        adj[lp].append(rp)
    match_l = matching_backend(len(g.left), len(g.right), adj)
    pairs = tuple((lp, rp) for lp, rp in enumerate(match_l) if rp != -1)
    return Matching(pairs)


def brute_force_matching_size(g: BipartiteGraph) -> int:
    """Exact maximum matching size by exhaustive search.

    Memoized on (left position, set of used right positions); guarded to
    at most 24 total vertices.  Test oracle only.
    """
    n_l, n_r = len(g.left), len(g.right)
    if n_l + n_r > BRUTE_FORCE_GUARD:
        raise LimitError(
            f"brute-force matching limited to {BRUTE_FORCE_GUARD} vertices, got {n_l + n_r}"
        )
    adj: list[list[int]] = [[] for _ in range(n_l)]
    for lp, rp in sorted(g.edges):
        adj[lp].append(rp)
    memo: dict[tuple[int, int], int] = {}

    def best(i: int, used: int) -> int:
        if i == n_l:
            return 0
        key = (i, used)
        if key in memo:
            return memo[key]
        res = best(i + 1, used)
        for r in adj[i]:
            if not (used >> r) & 1:
                cand = 1 + best(i + 1, used | (1 << r))
                if cand > res:
                    res = cand
        memo[key] = res
        return res

    return best(0, 0)
