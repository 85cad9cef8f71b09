"""Greedy wavelength assignment for rooted subtrees of a degree-3 host tree.

The colorer processes host tree edges in BFS discovery order, one round
per edge, coloring every still-uncolored subtree present on that edge.
Edges are classified 1-4 by how many edges at the earlier-discovered
endpoint are already processed.  Types 1-3 color first-fit.  Type 4 (a
degree-3 fork with exactly one processed sibling edge) runs two
competing schemes that pair up color-shareable subtrees via a maximum
matching in a complement conflict graph, and commits whichever scheme
ends the round with fewer distinct colors in use.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, MutableMapping, Sequence

from .conflict import (
    BipartiteGraph,
    ConflictGraph,
    build_conflict_graph,
    edge_complement_bipartite,
)
from .instances import (
    Coloring,
    HostTree,
    InputError,
    Instance,
    InternalError,
    edge_key,
    subtrees_on_edge,
)
from .matching import max_bipartite_matching


@dataclass(frozen=True)
class EdgeOrder:
    """Host tree edges in BFS discovery order, earlier endpoint first."""

    tree: HostTree
    root: int
    edges: tuple[tuple[int, int], ...]

    @property
    def parent_side(self) -> tuple[int, ...]:
        return tuple(e[0] for e in self.edges)


def bfs_edge_order(tree: HostTree, root: int) -> EdgeOrder:
    """BFS from `root`, neighbors in ascending vertex id; an edge is emitted
    the moment its far endpoint is discovered."""
    if not (0 <= root < tree.vertices):
        raise InputError(f"root {root} out of range for {tree.vertices} vertices")
    seen = {root}
    queue = deque([root])
    edges: list[tuple[int, int]] = []
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if w not in seen:
                seen.add(w)
                edges.append((u, w))
                queue.append(w)
    if len(edges) != len(tree.edges):
        raise InternalError("BFS did not reach every edge of a valid tree")
    return EdgeOrder(tree=tree, root=root, edges=tuple(edges))


@dataclass(frozen=True)
class EdgeType:
    """Classification of one round's edge; w/x only apply to kind 4."""

    kind: int
    w: int | None = None
    x: int | None = None


def classify_edge(order: EdgeOrder, i: int) -> EdgeType:
    """Type of the i-th (1-based) edge in the order.

    With u the earlier-discovered endpoint: kind 1 if no edge at u is
    processed yet (only round 1), kind 2 if deg(u)=2 and the sibling edge
    is processed, kind 3 if deg(u)=3 and both siblings are processed,
    kind 4 if deg(u)=3 and exactly one sibling is processed -- then w is
    the processed sibling's far endpoint and x the unprocessed one's.
    """
    if not (1 <= i <= len(order.edges)):
        raise InputError(f"round index {i} out of range")
    u, v = order.edges[i - 1]
    processed = {edge_key(a, b) for a, b in order.edges[: i - 1]}
    siblings = [n for n in order.tree.adjacency[u] if n != v]
    done = [n for n in siblings if edge_key(u, n) in processed]
    pending = [n for n in siblings if edge_key(u, n) not in processed]
    if not done:
        if i != 1:
            raise InternalError(f"round {i}: no processed edge at vertex {u}")
        return EdgeType(1)
    degree_u = len(siblings) + 1
    if degree_u == 2 and len(done) == 1:
        return EdgeType(2)
    if degree_u == 3 and len(done) == 2:
        return EdgeType(3)
    if degree_u == 3 and len(done) == 1:
        return EdgeType(4, w=done[0], x=pending[0])
    raise InternalError(f"round {i}: cannot classify edge ({u},{v}), degree {degree_u}")


def first_fit_color(idx: int, assignment: Mapping[int, int], g: ConflictGraph) -> int:
    """Smallest positive color not used by any colored neighbor of idx."""
    forbidden = {assignment[t] for t in g.adjacency[idx] if t in assignment}
    c = 1
    while c in forbidden:
        c += 1
    return c


def _shared_min_color(
    a: int, b: int, assignment: Mapping[int, int], g: ConflictGraph
) -> int:
    """Smallest color simultaneously feasible for two non-colliding subtrees."""
    forbidden = {assignment[t] for t in g.adjacency[a] if t in assignment}
    forbidden |= {assignment[t] for t in g.adjacency[b] if t in assignment}
    c = 1
    while c in forbidden:
        c += 1
    return c


def process_edge_simple(
    queue: Sequence[int], psi: MutableMapping[int, int], g: ConflictGraph
) -> None:
    """Color every subtree in `queue` first-fit, in ascending index order."""
    for q in queue:
        psi[q] = first_fit_color(q, psi, g)


def _reuse_graph(
    inst: Instance,
    g: ConflictGraph,
    psi: Mapping[int, int],
    colored: frozenset[int],
    edge: tuple[int, int],
    members: Sequence[int],
) -> BipartiteGraph:
    """Pairs of `members` (population of one host edge) that may share a color.

    Starts from the complement of the conflict graph restricted to the
    edge (bipartite by direction) and drops the pairs that must not be
    merged: two colored subtrees with different colors, and
    uncolored/colored pairs where some subtree colored like the colored
    one collides with the uncolored one.
    """
    base = edge_complement_bipartite(inst, edge, members)
    by_color: dict[int, list[int]] = {}
    for t in colored:
        by_color.setdefault(psi[t], []).append(t)

    def blocked(q: int, p: int) -> bool:
        q_adj = set(g.adjacency[q])
        return any(t in q_adj for t in by_color[psi[p]])

    kept = []
    for lp, rp in base.edges:
        i, j = base.left[lp], base.right[rp]
        i_colored, j_colored = i in colored, j in colored
        if i_colored and j_colored:
            if psi[i] != psi[j]:
                continue
        elif i_colored != j_colored:
            q, p = (j, i) if i_colored else (i, j)
            if blocked(q, p):
                continue
        kept.append((lp, rp))
    return BipartiteGraph(base.left, base.right, tuple(kept))


def _partner_map(bip: BipartiteGraph, matching) -> dict[int, int]:
    partner: dict[int, int] = {}
    for lp, rp in matching.pairs:
        i, j = bip.left[lp], bip.right[rp]
        partner[i] = j
        partner[j] = i
    return partner


def process_edge_1(
    inst: Instance,
    g: ConflictGraph,
    psi: MutableMapping[int, int],
    queue: Sequence[int],
    edge: tuple[int, int],
) -> None:
    """First type-4 scheme: reuse colors already present on the edge itself.

    Matches the edge's population (colored plus queued) in the reuse
    graph.  Matched uncolored/colored pairs inherit the colored partner's
    color; matched uncolored pairs take one shared minimal feasible
    color; leftovers go first-fit.  Ascending index order throughout.
    """
    colored = frozenset(psi)
    qset = set(queue)
    members = [i for i in subtrees_on_edge(inst, edge) if i in colored or i in qset]
    bip = _reuse_graph(inst, g, psi, colored, edge, members)
    partner = _partner_map(bip, max_bipartite_matching(bip))
    for q in queue:
        s = partner.get(q)
        if s is not None and s in colored:
            psi[q] = psi[s]
    for q in queue:
        if q in psi:
            continue
        s = partner.get(q)
        if s is not None and s not in colored:
            c = _shared_min_color(q, s, psi, g)
            psi[q] = c
            psi[s] = c
        else:
            psi[q] = first_fit_color(q, psi, g)


def process_edge_2(
    inst: Instance,
    g: ConflictGraph,
    psi: MutableMapping[int, int],
    queue: Sequence[int],
    u: int,
    v: int,
    w: int,
    x: int,
) -> None:
    """Second type-4 scheme: reuse colors from the unprocessed fork edge.

    Builds the reuse graph on the {u,x} population, restricted to queued
    subtrees present there plus subtrees colored on {u,x} but not on
    {u,v}.  Queued subtrees on {u,x} are colored first (inherit from a
    matched colored partner, share a minimal color with a matched queued
    partner, else first-fit); every other queued subtree then goes
    first-fit.
    """
    colored = frozenset(psi)
    qset = set(queue)
    on_ux = subtrees_on_edge(inst, (u, x))
    on_ux_set = set(on_ux)
    colored_uv = {i for i in subtrees_on_edge(inst, (u, v)) if i in colored}
    members = [
        i
        for i in on_ux
        if (i in colored and i not in colored_uv) or i in qset
    ]
    bip = _reuse_graph(inst, g, psi, colored, (u, x), members)
    partner = _partner_map(bip, max_bipartite_matching(bip))
    q_ux = [q for q in queue if q in on_ux_set]
    for q in q_ux:
        s = partner.get(q)
        if s is not None and s in colored:
            psi[q] = psi[s]
    for q in q_ux:
        if q in psi:
            continue
        s = partner.get(q)
        if s is not None and s not in colored:
            c = _shared_min_color(q, s, psi, g)
            psi[q] = c
            psi[s] = c
        else:
            psi[q] = first_fit_color(q, psi, g)
    for q in queue:
        if q not in psi:
            psi[q] = first_fit_color(q, psi, g)


@dataclass(frozen=True)
class RoundState:
    """Snapshot after one round: who was colored, with how many colors."""

    round: int
    processed_edges: tuple[tuple[int, int], ...]
    colored: frozenset[int]
    newly_colored: tuple[int, ...]
    colors_used_after: int
    kind: int


@dataclass(frozen=True)
class SchemeChoice:
    """Outcome of one type-4 round's scheme competition."""

    round: int
    edge: tuple[int, int]
    chosen: int
    colors_scheme1: int
    colors_scheme2: int


@dataclass(frozen=True)
class GreedyResult:
    coloring: Coloring
    trace: tuple[RoundState, ...]
    scheme_choices: tuple[SchemeChoice, ...]
    order: EdgeOrder


def greedy_color(inst: Instance, root: int = 0) -> GreedyResult:
    """Run the full round-based colorer from the given BFS root.

    Requires host tree degree <= 3.  Deterministic: identical instance
    and root always produce an identical result.
    """
    if not inst.tree.degree_ok:
        raise InputError("greedy coloring requires host tree degree <= 3")
    order = bfs_edge_order(inst.tree, root)
    g = build_conflict_graph(inst)
    psi: dict[int, int] = {}
    trace: list[RoundState] = []
    choices: list[SchemeChoice] = []
    prefix: list[tuple[int, int]] = []
    for i in range(1, len(order.edges) + 1):
        u, v = order.edges[i - 1]
        et = classify_edge(order, i)
        queue = tuple(j for j in subtrees_on_edge(inst, (u, v)) if j not in psi)
        if et.kind == 4:
            psi1 = dict(psi)
            process_edge_1(inst, g, psi1, queue, (u, v))
            psi2 = dict(psi)
            process_edge_2(inst, g, psi2, queue, u, v, et.w, et.x)
            c1 = len(set(psi1.values()))
            c2 = len(set(psi2.values()))
            if c1 <= c2:
                psi = psi1
                choices.append(SchemeChoice(i, (u, v), 1, c1, c2))
            else:
                psi = psi2
                choices.append(SchemeChoice(i, (u, v), 2, c1, c2))
        else:
            process_edge_simple(queue, psi, g)
        prefix.append((u, v))
        trace.append(
            RoundState(
                round=i,
                processed_edges=tuple(prefix),
                colored=frozenset(psi),
                newly_colored=queue,
                colors_used_after=len(set(psi.values())),
                kind=et.kind,
            )
        )
    return GreedyResult(
        coloring=Coloring(dict(psi)),
        trace=tuple(trace),
        scheme_choices=tuple(choices),
        order=order,
    )
