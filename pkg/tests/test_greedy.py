from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_instance
from oracles import collide_naive, coloring_valid_naive
from treewave import (
    HostTree,
    InputError,
    Instance,
    RootedSubtree,
    bfs_edge_order,
    build_conflict_graph,
    classify_edge,
    exact_chromatic,
    first_fit_color,
    greedy_color,
    load,
    normalize,
    process_edge_1,
    process_edge_2,
    process_edge_simple,
    subtrees_on_edge,
)
from treewave.greedy import _reuse_graph
from treewave.matching import max_bipartite_matching


class TestBfsEdgeOrder:
    def test_p3_from_end(self, p3_tree):
        order = bfs_edge_order(p3_tree, 0)
        assert order.edges == ((0, 1), (1, 2))
        assert order.parent_side == (0, 1)

    def test_star_ascending_neighbors(self, star_tree):
        order = bfs_edge_order(star_tree, 0)
        assert order.edges == ((0, 1), (0, 2), (0, 3))

    def test_p3_from_middle(self, p3_tree):
        order = bfs_edge_order(p3_tree, 1)
        assert order.edges == ((1, 0), (1, 2))
        assert order.parent_side == (1, 1)

    def test_root_out_of_range(self, p3_tree):
        with pytest.raises(InputError):
            bfs_edge_order(p3_tree, 7)

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_parent_side_already_discovered(self, seed):
        inst = make_instance(seed)
        order = bfs_edge_order(inst.tree, 0)
        discovered = {0}
        for u, v in order.edges:
            assert u in discovered
            assert v not in discovered
            discovered.add(v)


class TestClassifyEdge:
    def test_star_types(self, star_tree):
        order = bfs_edge_order(star_tree, 0)
        kinds = [classify_edge(order, i) for i in (1, 2, 3)]
        assert [k.kind for k in kinds] == [1, 4, 3]
        assert (kinds[1].w, kinds[1].x) == (1, 3)

    def test_p3_types(self, p3_tree):
        order = bfs_edge_order(p3_tree, 0)
        assert [classify_edge(order, i).kind for i in (1, 2)] == [1, 2]

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_first_round_always_kind_1(self, seed):
        inst = make_instance(seed)
        order = bfs_edge_order(inst.tree, 0)
        if order.edges:
            assert classify_edge(order, 1).kind == 1

    def test_bad_round_index(self, p3_tree):
        order = bfs_edge_order(p3_tree, 0)
        with pytest.raises(InputError):
            classify_edge(order, 0)
        with pytest.raises(InputError):
            classify_edge(order, 3)


class TestFirstFit:
    def test_no_colored_neighbors(self, p3_demo):
        g = build_conflict_graph(p3_demo)
        assert first_fit_color(0, {}, g) == 1

    def test_skips_used(self, star_demo):
        g = build_conflict_graph(star_demo)
        # subtree 1 collides with 0, 2 and 4
        assert first_fit_color(1, {0: 1, 2: 2}, g) == 3
        assert first_fit_color(1, {0: 1, 2: 3}, g) == 2


class TestProcessEdgeSimple:
    def test_empty_queue_no_change(self, p3_demo):
        g = build_conflict_graph(p3_demo)
        psi = {0: 1}
        process_edge_simple((), psi, g)
        assert psi == {0: 1}

    def test_p3_demo_round1(self, p3_demo):
        g = build_conflict_graph(p3_demo)
        psi: dict[int, int] = {}
        process_edge_simple((0, 1, 2), psi, g)
        assert psi == {0: 1, 1: 1, 2: 2}

    def test_two_colliding_uncolored(self, p3_tree):
        dup = RootedSubtree.of(0, [[0, 1]])
        inst = Instance(p3_tree, (dup, dup))
        g = build_conflict_graph(inst)
        psi: dict[int, int] = {}
        process_edge_simple((0, 1), psi, g)
        assert psi == {0: 1, 1: 2}


class TestProcessEdge1:
    def test_empty_queue_identity(self, p3_demo):
        g = build_conflict_graph(p3_demo)
        psi = {0: 1, 1: 1, 2: 2}
        before = dict(psi)
        process_edge_1(p3_demo, g, psi, (), (0, 1))
        assert psi == before

    def test_single_inherit_via_matching(self, p3_tree):
        inst = Instance(
            p3_tree,
            (RootedSubtree.of(0, [[0, 1]]), RootedSubtree.of(1, [[1, 0]])),
        )
        g = build_conflict_graph(inst)
        psi = {0: 1}
        process_edge_1(inst, g, psi, (1,), (0, 1))
        assert psi[1] == 1


class TestProcessEdge2:
    def test_no_queue_on_fork_edge_degenerates_to_first_fit(self, star_tree):
        inst = Instance(
            star_tree,
            (
                RootedSubtree.of(0, [[0, 2]]),
                RootedSubtree.of(0, [[0, 2]]),
            ),
        )
        g = build_conflict_graph(inst)
        psi_a: dict[int, int] = {}
        process_edge_2(inst, g, psi_a, (0, 1), 0, 2, 1, 3)
        psi_b: dict[int, int] = {}
        process_edge_simple((0, 1), psi_b, g)
        assert psi_a == psi_b == {0: 1, 1: 2}

    def test_queue_pairs_on_fork_edge_share_colors(self, star_tree):
        inst = Instance(
            star_tree,
            (
                RootedSubtree.of(2, [[2, 0], [0, 3]]),
                RootedSubtree.of(3, [[3, 0], [0, 2]]),
            ),
        )
        g = build_conflict_graph(inst)
        psi: dict[int, int] = {}
        process_edge_2(inst, g, psi, (0, 1), 0, 2, 1, 3)
        assert psi == {0: 1, 1: 1}


def _partial_valid(inst, psi) -> bool:
    colored = sorted(psi)
    for i, j in itertools.combinations(colored, 2):
        if psi[i] == psi[j] and collide_naive(inst.subtrees[i], inst.subtrees[j]):
            return False
    return True


def _contiguous(psi) -> bool:
    used = set(psi.values())
    return used == set(range(1, len(used) + 1))


def _replay_with_subroutine_checks(inst) -> tuple[dict[int, int], int]:
    """Mirror the round loop, checking subroutine invariants at every
    fork round; returns the final assignment and the fork-round count."""
    order = bfs_edge_order(inst.tree, 0)
    g = build_conflict_graph(inst)
    psi: dict[int, int] = {}
    forks = 0
    for i in range(1, len(order.edges) + 1):
        u, v = order.edges[i - 1]
        et = classify_edge(order, i)
        queue = tuple(j for j in subtrees_on_edge(inst, (u, v)) if j not in psi)
        if et.kind != 4:
            process_edge_simple(queue, psi, g)
            assert _partial_valid(inst, psi)
            continue
        forks += 1
        colored = frozenset(psi)
        qset = set(queue)

        # scheme 1 invariants
        psi1 = dict(psi)
        members1 = [
            k for k in subtrees_on_edge(inst, (u, v)) if k in colored or k in qset
        ]
        bip1 = _reuse_graph(inst, g, psi, colored, (u, v), members1)
        m1 = max_bipartite_matching(bip1)
        process_edge_1(inst, g, psi1, queue, (u, v))
        assert _partial_valid(inst, psi1)
        assert set(queue) <= set(psi1)
        v1_colors = {psi1[k] for k in members1}
        assert len(v1_colors) <= len(members1) - m1.size
        for lp, rp in m1.pairs:
            assert psi1[bip1.left[lp]] == psi1[bip1.right[rp]]

        # scheme 2 invariants
        psi2 = dict(psi)
        on_ux = set(subtrees_on_edge(inst, (u, et.x)))
        colored_uv = {
            k for k in subtrees_on_edge(inst, (u, v)) if k in colored
        }
        members2 = [
            k
            for k in sorted(on_ux)
            if (k in colored and k not in colored_uv) or k in qset
        ]
        bip2 = _reuse_graph(inst, g, psi, colored, (u, et.x), members2)
        m2 = max_bipartite_matching(bip2)
        process_edge_2(inst, g, psi2, queue, u, v, et.w, et.x)
        assert _partial_valid(inst, psi2)
        assert set(queue) <= set(psi2)
        if members2:
            v2_colors = {psi2[k] for k in members2}
            assert len(v2_colors) <= len(members2) - m2.size
        for lp, rp in m2.pairs:
            assert psi2[bip2.left[lp]] == psi2[bip2.right[rp]]

        c1 = len(set(psi1.values()))
        c2 = len(set(psi2.values()))
        psi = psi1 if c1 <= c2 else psi2
        assert _contiguous(psi)
    return psi, forks


class TestGreedyColor:
    def test_empty_instance(self, p3_tree):
        res = greedy_color(Instance(p3_tree, ()))
        assert res.coloring.colors_used == 0
        assert len(res.trace) == 2

    def test_p3_demo_optimal(self, p3_demo):
        res = greedy_color(p3_demo)
        chi, _ = exact_chromatic(build_conflict_graph(p3_demo))
        assert res.coloring.colors_used == 2 == chi
        assert res.coloring.assignment[0] != res.coloring.assignment[2]

    def test_degree_4_rejected(self):
        star5 = HostTree.of(5, [[0, 1], [0, 2], [0, 3], [0, 4]])
        inst = Instance(star5, (RootedSubtree.of(0, [[0, 1]]),))
        with pytest.raises(InputError):
            greedy_color(inst)

    def test_deterministic(self, star_demo):
        assert greedy_color(star_demo) == greedy_color(star_demo)

    @settings(max_examples=80, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_valid_contiguous_and_bounded_below(self, seed):
        inst = make_instance(seed)
        res = greedy_color(inst)
        psi = dict(res.coloring.assignment)
        assert res.coloring.is_total(inst.size)
        assert coloring_valid_naive(inst, psi)
        assert _contiguous(psi)
        assert res.coloring.colors_used >= load(inst)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_trace_recurrences(self, seed):
        inst = make_instance(seed)
        res = greedy_color(inst)
        previous: frozenset[int] = frozenset()
        for rs in res.trace:
            expected_queue = tuple(
                j
                for j in subtrees_on_edge(inst, rs.processed_edges[-1])
                if j not in previous
            )
            assert rs.newly_colored == expected_queue
            assert rs.colored == previous | set(rs.newly_colored)
            previous = rs.colored
        assert len(res.trace) == len(inst.tree.edges)

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_exactly_one_kind_1_round(self, seed):
        inst = make_instance(seed)
        res = greedy_color(inst)
        kinds = [rs.kind for rs in res.trace]
        if kinds:
            assert kinds.count(1) == 1
            assert kinds[0] == 1

    @settings(max_examples=60, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_fork_commits_the_better_scheme(self, seed):
        inst = make_instance(seed)
        res = greedy_color(inst)
        for choice in res.scheme_choices:
            committed = res.trace[choice.round - 1].colors_used_after
            assert committed == min(choice.colors_scheme1, choice.colors_scheme2)
            assert choice.chosen == (
                1 if choice.colors_scheme1 <= choice.colors_scheme2 else 2
            )


def test_subroutine_invariants_on_fork_rounds():
    forks_seen = 0
    for seed in range(160):
        inst = make_instance(seed, max_vertices=9, max_subtrees=9)
        psi, forks = _replay_with_subroutine_checks(inst)
        forks_seen += forks
        res = greedy_color(inst)
        assert dict(res.coloring.assignment) == psi
    assert forks_seen >= 60


def test_normalized_star_demo_matches_replay(star_demo):
    padded = normalize(star_demo).padded
    psi, forks = _replay_with_subroutine_checks(padded)
    assert forks == 1
    assert dict(greedy_color(padded).coloring.assignment) == psi
