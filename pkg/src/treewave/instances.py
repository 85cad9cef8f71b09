"""Data model: host trees, rooted subtrees, instances, colorings.

A host tree is the undirected fiber topology.  A rooted subtree is one
multicast light tree: an out-arborescence whose underlying undirected
graph (its skeleton) is a subtree of the host tree.  An instance pairs a
host tree with an ordered multiset of rooted subtrees; identity of a
subtree is its list position, never structural equality, so duplicates
are allowed and kept apart.

All types are immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence


class InputError(ValueError):
    """Rejected input: malformed data, infeasible parameters, bad keys."""


class LimitError(InputError):
    """An exact oracle was asked to exceed its size guard."""


class InternalError(RuntimeError):
    """A structural invariant the code relies on was broken."""


class Arc(NamedTuple):
    """Directed edge (tail -> head) along one fiber link."""

    tail: int
    head: int

    def reverse(self) -> "Arc":
        return Arc(self.head, self.tail)


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class HostTree:
    """Undirected tree on vertices 0..vertices-1; edge list keeps file order."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def of(vertices: int, edges: Iterable[Sequence[int]]) -> "HostTree":
        return HostTree(vertices, tuple((int(u), int(v)) for u, v in edges))

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(edge_key(u, v) for u, v in self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertices)]
        for u, v in self.edges:
            if 0 <= u < self.vertices and 0 <= v < self.vertices:
                nbrs[u].append(v)
                nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degree_ok(self) -> bool:
        """True iff every vertex has degree <= 3 (what the greedy colorer needs)."""
        return all(len(ns) <= 3 for ns in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set


@dataclass(frozen=True)
class TreeReport:
    ok: bool
    degree_ok: bool
    violations: tuple[str, ...]


def validate_tree(tree: HostTree) -> TreeReport:
    """Check the host-tree invariants; violations are data, not failures."""
    violations: list[str] = []
    n = tree.vertices
    if n < 0:
        violations.append("vertex count is negative")
    seen: set[tuple[int, int]] = set()
    for u, v in tree.edges:
        if not (0 <= u < n and 0 <= v < n):
            violations.append(f"edge ({u},{v}) has endpoint out of range")
            continue
        if u == v:
            violations.append(f"self-loop at vertex {u}")
            continue
        k = edge_key(u, v)
        if k in seen:
            violations.append(f"duplicate edge {k}")
        seen.add(k)
    if len(tree.edges) != n - 1:
        violations.append(
            f"edge count {len(tree.edges)} != vertices-1 ({n - 1}): cycle or forest"
        )
    if not violations and n > 0:
        reached = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in tree.adjacency[u]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != n:
            violations.append("not connected: some vertex unreachable from 0")
    degree_ok = not violations and tree.degree_ok
    return TreeReport(ok=not violations, degree_ok=degree_ok, violations=tuple(violations))


@dataclass(frozen=True)
class RootedSubtree:
    """One light tree: root plus directed arcs forming an out-arborescence."""

    root: int
    arcs: tuple[Arc, ...]

    @staticmethod
    def of(root: int, arcs: Iterable[Sequence[int]]) -> "RootedSubtree":
        return RootedSubtree(int(root), tuple(Arc(int(t), int(h)) for t, h in arcs))

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        verts = {self.root}
        for a in self.arcs:
            verts.add(a.tail)
            verts.add(a.head)
        return frozenset(verts)


@dataclass(frozen=True)
class SubtreeReport:
    ok: bool
    violations: tuple[str, ...]


def validate_subtree(tree: HostTree, s: RootedSubtree) -> SubtreeReport:
    """Check one rooted subtree against its host tree."""
    violations: list[str] = []
    if not s.arcs:
        violations.append("subtree has no arcs (requests must occupy a fiber link)")
        return SubtreeReport(False, tuple(violations))
    skeleton: set[tuple[int, int]] = set()
    indeg: dict[int, int] = {}
    for t, h in s.arcs:
        if t == h:
            violations.append(f"arc ({t},{h}) is a self-loop")
            continue
        if not tree.has_edge(t, h):
            violations.append(f"arc ({t},{h}) is not a host tree edge")
        k = edge_key(t, h)
        if k in skeleton:
            violations.append(f"skeleton edge {k} used twice")
        skeleton.add(k)
        indeg[h] = indeg.get(h, 0) + 1
        indeg.setdefault(t, 0)
    if violations:
        return SubtreeReport(False, tuple(violations))
    touched = set(indeg)
    if s.root not in touched:
        violations.append(f"root {s.root} not touched by any arc")
    if indeg.get(s.root, 0) != 0:
        violations.append(f"root {s.root} has in-degree {indeg.get(s.root, 0)}")
    for v in sorted(touched):
        if v != s.root and indeg.get(v, 0) != 1:
            violations.append(f"vertex {v} has in-degree {indeg.get(v, 0)}, expected 1")
    # connected + acyclic: |arcs| = |vertices| - 1 and every vertex reachable
    # from the root along arc directions.
    if len(s.arcs) != len(s.vertex_set) - 1:
        violations.append("skeleton is not a tree (arc/vertex count mismatch)")
    else:
        out: dict[int, list[int]] = {}
        for t, h in s.arcs:
            out.setdefault(t, []).append(h)
        reached = {s.root}
        stack = [s.root]
        while stack:
            u = stack.pop()
            for w in out.get(u, ()):
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if reached != set(s.vertex_set):
            violations.append("skeleton not connected from root along arc directions")
    return SubtreeReport(ok=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class Instance:
    """Host tree plus an ordered multiset of rooted subtrees.

    Construction validates everything except the degree-3 restriction,
    which only the greedy colorer enforces (generators and the exact
    oracles are degree-agnostic).
    """

    tree: HostTree
    subtrees: tuple[RootedSubtree, ...]

    def __post_init__(self) -> None:
        rep = validate_tree(self.tree)
        if not rep.ok:
            raise InputError("invalid host tree: " + "; ".join(rep.violations))
        for i, s in enumerate(self.subtrees):
            srep = validate_subtree(self.tree, s)
            if not srep.ok:
                raise InputError(f"invalid subtree {i}: " + "; ".join(srep.violations))

    @cached_property
    def per_arc_index(self) -> Mapping[Arc, tuple[int, ...]]:
        """Arc -> ascending indices of the subtrees present on that arc."""
        index: dict[Arc, list[int]] = {}
        for i, s in enumerate(self.subtrees):
            for a in s.arcs:
                index.setdefault(a, []).append(i)
        return {a: tuple(ix) for a, ix in index.items()}

    @property
    def size(self) -> int:
        return len(self.subtrees)


def collide(a: RootedSubtree, b: RootedSubtree) -> bool:
    """True iff the two subtrees share a directed edge.

    Sharing an undirected link in opposite directions is not a collision;
    the fibers are unidirectional.
    """
    return not a.arc_set.isdisjoint(b.arc_set)


def load(inst: Instance) -> int:
    """Maximum number of subtrees on any single directed edge (0 if none)."""
    return max((len(ix) for ix in inst.per_arc_index.values()), default=0)


def subtrees_on_arc(inst: Instance, arc: Arc | Sequence[int]) -> tuple[int, ...]:
    """Ascending indices of subtrees present on one directed edge."""
    t, h = arc
    if not inst.tree.has_edge(t, h):
        raise InputError(f"({t},{h}) is not an edge of the host tree")
    return inst.per_arc_index.get(Arc(t, h), ())


def subtrees_on_edge(inst: Instance, edge: Sequence[int]) -> tuple[int, ...]:
    """Ascending indices of subtrees present on either direction of an edge."""
    u, v = edge
    if not inst.tree.has_edge(u, v):
        raise InputError(f"{{{u},{v}}} is not an edge of the host tree")
    fwd = inst.per_arc_index.get(Arc(u, v), ())
    bwd = inst.per_arc_index.get(Arc(v, u), ())
    return tuple(sorted(fwd + bwd))


@dataclass(frozen=True)
class Coloring:
    """Map from subtree index to a positive color; partial during a run."""

    assignment: Mapping[int, int] = field(default_factory=dict)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def is_total(self, n: int) -> bool:
        return all(i in self.assignment for i in range(n))

    def color_list(self, n: int) -> list[int]:
        """Colors in subtree order; raises on a partial coloring."""
        if not self.is_total(n):
            raise InputError("coloring is partial; expected a color per subtree")
        return [self.assignment[i] for i in range(n)]
