"""Benchmark the compiled kernels against the pure-Python fallback.

Run as ``python -m treewave.kernel_bench``.  Workloads are seeded, so
timings are comparable across runs; outputs of the two backends are
asserted equal while timing.
"""

from __future__ import annotations

import time

from ._kernels import BACKEND, pure
from .conflict import build_conflict_graph
from .harness import SweepSpec, sweep_items
from .bounds import normalize
from .rng import XorShift64Star

try:
    from ._kernels import _speedups as compiled
except ImportError:
    compiled = None


def _random_bipartite(rng: XorShift64Star, n_left: int, n_right: int, density: int):
    adj: list[list[int]] = []
    for _ in range(n_left):
        row = [r for r in range(n_right) if rng.below(100) < density]
        adj.append(row)
    return adj


def _matching_workload(count: int = 300):
    rng = XorShift64Star(2024)
    work = []
    for _ in range(count):
        nl = 5 + rng.below(20)
        nr = 5 + rng.below(20)
        work.append((nl, nr, _random_bipartite(rng, nl, nr, 30)))
    return work


def _graph_workload(count: int = 60):
    items = sweep_items(SweepSpec(instances=count, seed=77, max_vertices=9, max_subtrees=11))
    graphs = []
    for item in items:
        padded = normalize(item.instance).padded
        if 0 < padded.size <= 63:
            g = build_conflict_graph(padded)
            graphs.append((g.n, list(g.adj_masks)))
    return graphs


def _time(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def run() -> None:
    if compiled is None:
        print("compiled backend unavailable; nothing to compare (pure only)")
        return
    print(f"active backend: {BACKEND}")
    rows = []

    work = _matching_workload()
    pure_s = _time(lambda: [pure.max_matching(nl, nr, adj) for nl, nr, adj in work])
    comp_s = _time(lambda: [compiled.max_matching(nl, nr, adj) for nl, nr, adj in work])
    for nl, nr, adj in work[:20]:
        assert pure.max_matching(nl, nr, adj) == compiled.max_matching(nl, nr, adj)
    rows.append(("max_matching", len(work), pure_s, comp_s))

    graphs = _graph_workload()
    pure_s = _time(lambda: [pure.chromatic_number(n, m) for n, m in graphs])
    comp_s = _time(lambda: [compiled.chromatic_number(n, m) for n, m in graphs])
    for n, m in graphs[:20]:
        assert pure.chromatic_number(n, m) == compiled.chromatic_number(n, m)
    rows.append(("chromatic_number", len(graphs), pure_s, comp_s))

    pure_s = _time(lambda: [pure.max_clique(n, m) for n, m in graphs])
    comp_s = _time(lambda: [compiled.max_clique(n, m) for n, m in graphs])
    for n, m in graphs[:20]:
        assert pure.max_clique(n, m) == compiled.max_clique(n, m)
    rows.append(("max_clique", len(graphs), pure_s, comp_s))

    print(f"{'kernel':<18} {'calls':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for name, calls, p, c in rows:
        speedup = p / c if c > 0 else float("inf")
        print(f"{name:<18} {calls:>6} {p:>10.4f} {c:>13.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    run()
