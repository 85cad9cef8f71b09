"""Pure-Python kernels: bipartite matching, exact chromatic number, max clique.

These are the reference implementations.  The compiled extension in
``_speedups.pyx`` is a line-for-line translation restricted to graphs of
at most 63 vertices (one machine word of bitmask); both backends must
produce identical outputs, including witnesses, which the test suite
asserts.  Every tie-break below is deliberate: lowest index wins among
equals, so results are reproducible everywhere.

Graphs arrive as bitmask adjacency rows: ``masks[v]`` has bit ``u`` set
iff ``{u,v}`` is an edge.
"""

from __future__ import annotations


def max_matching(n_left: int, n_right: int, adj: list[list[int]]) -> list[int]:
    """Maximum bipartite matching via augmenting paths (Kuhn).

    ``adj[l]`` lists right positions adjacent to left position ``l`` in
    ascending order.  Left vertices are processed in ascending order and
    neighbors tried in list order, which pins down the returned matching.
    Returns ``match_of_left`` with -1 for unmatched left vertices.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right

    def augment(l: int, visited: list[bool]) -> bool:
        for r in adj[l]:
            if not visited[r]:
                visited[r] = True
                if match_r[r] == -1 or augment(match_r[r], visited):
                    match_r[r] = l
                    match_l[l] = r
                    return True
        return False

    for l in range(n_left):
        augment(l, [False] * n_right)
    return match_l


def _greedy_clique(n: int, masks: list[int]) -> list[int]:
    """Greedy clique: seed with the max-degree vertex, extend by degree
    inside the shrinking candidate set; lowest index breaks ties."""
    best_v = 0
    best_d = -1
    for v in range(n):
        d = bin(masks[v]).count("1")
        if d > best_d:
            best_d = d
            best_v = v
    clique = [best_v]
    cand = masks[best_v]
    while cand:
        pick = -1
        pick_d = -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = bin(masks[v] & cand).count("1")
            if d > pick_d:
                pick_d = d
                pick = v
        clique.append(pick)
        cand &= masks[pick]
    return clique


def _first_fit(n: int, masks: list[int]) -> list[int]:
    """First-fit coloring in index order; colors are 1-based."""
    colors = [0] * n
    for v in range(n):
        used = 0
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if colors[u]:
                used |= 1 << (colors[u] - 1)
        c = 1
        while used & (1 << (c - 1)):
            c += 1
        colors[v] = c
    return colors


def chromatic_number(n: int, masks: list[int]) -> tuple[int, list[int]]:
    """Exact chromatic number with an optimal witness (1-based colors).

    Branch and bound: a greedy clique gives the initial lower bound and is
    pre-colored 1..k to break color symmetry; first-fit gives the initial
    upper bound and witness; vertices are then chosen by maximum
    saturation (distinct neighbor colors), degree and lowest index
    breaking ties, and a branch is cut as soon as it cannot use fewer
    colors than the incumbent.
    """
    if n == 0:
        return 0, []
    clique = _greedy_clique(n, masks)
    lb = len(clique)
    ff = _first_fit(n, masks)
    ub = max(ff)
    if lb == ub:
        return ub, ff
    best = ub
    best_colors = list(ff)
    colors = [0] * n
    for i, v in enumerate(clique):
        colors[v] = i + 1
    degrees = [bin(masks[v]).count("1") for v in range(n)]

    def dfs(colored: int, used: int) -> None:
        nonlocal best, best_colors
        if used >= best:
            return
        if colored == n:
            best = used
            best_colors = list(colors)
            return
        # pick the uncolored vertex with max (saturation, degree), min index
        pick = -1
        pick_sat = -1
        pick_deg = -1
        for v in range(n):
            if colors[v]:
                continue
            seen = 0
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[u]:
                    seen |= 1 << (colors[u] - 1)
            sat = bin(seen).count("1")
            if sat > pick_sat or (sat == pick_sat and degrees[v] > pick_deg):
                pick_sat = sat
                pick_deg = degrees[v]
                pick = v
        forbidden = 0
        m = masks[pick]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if colors[u]:
                forbidden |= 1 << (colors[u] - 1)
        top = used + 1
        if top > best - 1:
            top = best - 1
        for c in range(1, top + 1):
            if forbidden & (1 << (c - 1)):
                continue
            colors[pick] = c
            dfs(colored + 1, used if c <= used else c)
            colors[pick] = 0

    dfs(lb, lb)
    return best, best_colors


def _color_bound(cand: int, masks: list[int]) -> int:
    """Greedy coloring of the candidate set (ascending index): class count
    bounds the largest clique inside ``cand``."""
    classes: list[int] = []
    m = cand
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        placed = False
        for k in range(len(classes)):
            if not (masks[v] & classes[k]):
                classes[k] |= 1 << v
                placed = True
                break
        if not placed:
            classes.append(1 << v)
    return len(classes)


def max_clique(n: int, masks: list[int]) -> int:
    """Exact maximum clique size by branch and bound.

    Candidates are consumed in ascending index order so each clique is
    enumerated once; subtrees of the search are cut with the greedy
    coloring bound and the remaining-candidate count.
    """
    if n == 0:
        return 0
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            new_size = size + 1
            if new_size > best:
                best = new_size
            sub = cand & masks[v]
            if sub and new_size + _color_bound(sub, masks) > best:
                expand(sub, new_size)

    expand((1 << n) - 1, 0)
    return best
