"""Lower bounds, load normalization, and exact oracles.

Normalization pads an instance with single-arc subtrees until every
directed edge carries exactly the load; it never changes the chromatic
number of the conflict graph, so analysis and certification can assume
uniform arc populations.

The conflict graph restricted to one host edge is the complement of a
bipartite graph, so its chromatic number is exactly (population size)
minus (maximum matching in the complement); maximized over edges this
gives the certified lower bound.  Exact chromatic number and clique
number come from small branch-and-bound oracles behind explicit size
guards.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from ._kernels import chromatic_backend, clique_backend
from .conflict import ConflictGraph, build_conflict_graph, edge_complement_bipartite
from .greedy import first_fit_color
from .instances import (
    Arc,
    Coloring,
    Instance,
    LimitError,
    RootedSubtree,
    edge_key,
    load,
    subtrees_on_edge,
)
from .matching import max_bipartite_matching

ORACLE_GUARD = 30


@dataclass(frozen=True)
class NormalizedInstance:
    """Instance padded so every directed edge carries exactly the load.

    The first `original_count` subtrees are the originals, in order;
    everything after is padding, one single-arc subtree per unit of
    deficit.
    """

    padded: Instance
    original_count: int
    padding_per_arc: Mapping[Arc, int]

    @property
    def padding_count(self) -> int:
        return self.padded.size - self.original_count


def normalize(inst: Instance) -> NormalizedInstance:
    """Pad with single-arc subtrees (rooted at the arc tail) until uniform.

    Padding is appended per undirected edge in input order, (min,max)
    direction before (max,min), so the result is deterministic.
    """
    target = load(inst)
    padding: list[RootedSubtree] = []
    per_arc: dict[Arc, int] = {}
    for u, v in inst.tree.edges:
        a, b = edge_key(u, v)
        for arc in (Arc(a, b), Arc(b, a)):
            deficit = target - len(inst.per_arc_index.get(arc, ()))
            per_arc[arc] = deficit
            padding.extend(
                RootedSubtree(arc.tail, (arc,)) for _ in range(deficit)
            )
    padded = Instance(inst.tree, inst.subtrees + tuple(padding))
    return NormalizedInstance(padded, inst.size, per_arc)


def edge_lower_bound(inst: Instance, edge: Sequence[int]) -> int:
    """Colors needed for the subtrees on one host edge alone.

    This is exact: each direction is a clique, color classes in the
    restriction have size at most 2, and classes of size 2 are exactly
    matched pairs in the bipartite complement.
    """
    population = subtrees_on_edge(inst, edge)
    if not population:
        return 0
    comp = edge_complement_bipartite(inst, edge, population)
    return len(population) - max_bipartite_matching(comp).size


def global_lower_bound(inst: Instance) -> int:
    """Best per-edge lower bound over all host edges."""
    return max(
        (edge_lower_bound(inst, (u, v)) for u, v in inst.tree.edges), default=0
    )


def exact_chromatic(g: ConflictGraph, limit: int = ORACLE_GUARD) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal witness coloring.

    Branch and bound over DSATUR-style vertex choices with a greedy
    clique lower bound and first-fit upper bound.  Guarded: graphs larger
    than `limit` are rejected so runs stay reproducible.
    """
    if g.n > limit:
        raise LimitError(f"exact coloring limited to {limit} vertices, got {g.n}")
    chi, colors = chromatic_backend(g.n, list(g.adj_masks))
    return chi, Coloring({i: c for i, c in enumerate(colors)})


def max_clique(g: ConflictGraph, limit: int = ORACLE_GUARD) -> int:
    """Exact maximum clique size (0 for the empty graph), guarded like
    exact_chromatic."""
    if g.n > limit:
        raise LimitError(f"max clique limited to {limit} vertices, got {g.n}")
    return clique_backend(g.n, list(g.adj_masks))


def first_fit_baseline(inst: Instance) -> Coloring:
    """Naive comparison baseline: first-fit in input order."""
    g = build_conflict_graph(inst)
    psi: dict[int, int] = {}
    for i in range(inst.size):
        psi[i] = first_fit_color(i, psi, g)
    return Coloring(psi)


@dataclass(frozen=True)
class BoundsReport:
    """Everything cheap we know about the colors an instance needs."""

    load: int
    per_edge_bound: Mapping[tuple[int, int], int]
    global_lower_bound: int
    clique_lower_bound: int | None = None
    exact_chromatic: int | None = None


def compute_bounds(
    inst: Instance,
    with_clique: bool = True,
    with_exact: bool = True,
    limit: int = ORACLE_GUARD,
) -> BoundsReport:
    """Bounds report; the exact quantities are skipped when over the guard."""
    per_edge = {
        edge_key(u, v): edge_lower_bound(inst, (u, v)) for u, v in inst.tree.edges
    }
    glb = max(per_edge.values(), default=0)
    clique = None
    chi = None
    if (with_clique or with_exact) and inst.size <= limit:
        g = build_conflict_graph(inst)
        if with_clique:
            clique = max_clique(g, limit)
        if with_exact:
            chi = exact_chromatic(g, limit)[0]
    return BoundsReport(
        load=load(inst),
        per_edge_bound=per_edge,
        global_lower_bound=glb,
        clique_lower_bound=clique,
        exact_chromatic=chi,
    )
