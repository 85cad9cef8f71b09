# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: a line-for-line translation of ``pure.py``.

Restricted to graphs of at most 63 vertices so adjacency rows fit in one
unsigned 64-bit word; the dispatcher falls back to the pure versions
beyond that.  Tie-breaks match the pure code exactly, so both backends
return identical results (the test suite asserts this).
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64


cdef int _popcount(u64 x) noexcept:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef int _lowest(u64 x) noexcept:
    cdef int i = 0
    while not (x & 1):
        x >>= 1
        i += 1
    return i


# ---------------------------------------------------------------- matching

cdef bint _augment(int l, int* adj_flat, int* adj_start, int* adj_len,
                   int* match_l, int* match_r, bint* visited) noexcept:
    cdef int k, r
    for k in range(adj_len[l]):
        r = adj_flat[adj_start[l] + k]
        if not visited[r]:
            visited[r] = True
            if match_r[r] == -1 or _augment(match_r[r], adj_flat, adj_start,
                                            adj_len, match_l, match_r, visited):
                match_r[r] = l
                match_l[l] = r
                return True
    return False


def max_matching(int n_left, int n_right, adj):
    """Kuhn's augmenting paths; adj is a list of ascending neighbor lists."""
    cdef int total = 0
    cdef int l, k, r
    for l in range(n_left):
        total += len(adj[l])
    cdef int* adj_flat = <int*> malloc(max(total, 1) * sizeof(int))
    cdef int* adj_start = <int*> malloc(max(n_left, 1) * sizeof(int))
    cdef int* adj_len = <int*> malloc(max(n_left, 1) * sizeof(int))
    cdef int* match_l = <int*> malloc(max(n_left, 1) * sizeof(int))
    cdef int* match_r = <int*> malloc(max(n_right, 1) * sizeof(int))
    cdef bint* visited = <bint*> malloc(max(n_right, 1) * sizeof(bint))
    if (adj_flat == NULL or adj_start == NULL or adj_len == NULL or
            match_l == NULL or match_r == NULL or visited == NULL):
        free(adj_flat); free(adj_start); free(adj_len)
        free(match_l); free(match_r); free(visited)
        raise MemoryError()
    try:
        total = 0
        for l in range(n_left):
            adj_start[l] = total
            adj_len[l] = len(adj[l])
            for k in range(adj_len[l]):
                adj_flat[total] = adj[l][k]
                total += 1
            match_l[l] = -1
        for r in range(n_right):
            match_r[r] = -1
        for l in range(n_left):
            for r in range(n_right):
                visited[r] = False
            _augment(l, adj_flat, adj_start, adj_len, match_l, match_r, visited)
        return [match_l[l] for l in range(n_left)]
    finally:
        free(adj_flat); free(adj_start); free(adj_len)
        free(match_l); free(match_r); free(visited)


# ---------------------------------------------------------- chromatic number

cdef struct ChiState:
    int n
    int best
    u64* masks
    int* colors
    int* best_colors
    int* degrees


cdef void _chi_dfs(ChiState* st, int colored, int used) noexcept:
    cdef int v, u, sat, pick, pick_sat, pick_deg, c, top
    cdef u64 m, seen, forbidden
    if used >= st.best:
        return
    if colored == st.n:
        st.best = used
        for v in range(st.n):
            st.best_colors[v] = st.colors[v]
        return
    pick = -1
    pick_sat = -1
    pick_deg = -1
    for v in range(st.n):
        if st.colors[v]:
            continue
        seen = 0
        m = st.masks[v]
        while m:
            u = _lowest(m)
            m &= m - 1
            if st.colors[u]:
                seen |= (<u64>1) << (st.colors[u] - 1)
        sat = _popcount(seen)
        if sat > pick_sat or (sat == pick_sat and st.degrees[v] > pick_deg):
            pick_sat = sat
            pick_deg = st.degrees[v]
            pick = v
    forbidden = 0
    m = st.masks[pick]
    while m:
        u = _lowest(m)
        m &= m - 1
        if st.colors[u]:
            forbidden |= (<u64>1) << (st.colors[u] - 1)
    top = used + 1
    if top > st.best - 1:
        top = st.best - 1
    for c in range(1, top + 1):
        if forbidden & ((<u64>1) << (c - 1)):
            continue
        st.colors[pick] = c
        _chi_dfs(st, colored + 1, used if c <= used else c)
        st.colors[pick] = 0


def chromatic_number(int n, masks_list):
    """Exact chromatic number and witness; see the pure version for the
    algorithm description."""
    if n == 0:
        return 0, []
    if n > 63:
        raise ValueError("compiled kernel limited to 63 vertices")
    cdef u64* masks = <u64*> malloc(n * sizeof(u64))
    cdef int* colors = <int*> malloc(n * sizeof(int))
    cdef int* best_colors = <int*> malloc(n * sizeof(int))
    cdef int* degrees = <int*> malloc(n * sizeof(int))
    cdef int* clique = <int*> malloc(n * sizeof(int))
    if masks == NULL or colors == NULL or best_colors == NULL or degrees == NULL or clique == NULL:
        free(masks); free(colors); free(best_colors); free(degrees); free(clique)
        raise MemoryError()
    cdef int v, u, d, best_v, best_d, clique_len, pick, pick_d, c, i, lb, ub
    cdef u64 m, cand, used_mask
    cdef ChiState st
    try:
        for v in range(n):
            masks[v] = masks_list[v]
            degrees[v] = _popcount(masks[v])
        # greedy clique: max degree seed, extend by degree inside candidates
        best_v = 0
        best_d = -1
        for v in range(n):
            if degrees[v] > best_d:
                best_d = degrees[v]
                best_v = v
        clique[0] = best_v
        clique_len = 1
        cand = masks[best_v]
        while cand:
            pick = -1
            pick_d = -1
            m = cand
            while m:
                v = _lowest(m)
                m &= m - 1
                d = _popcount(masks[v] & cand)
                if d > pick_d:
                    pick_d = d
                    pick = v
            clique[clique_len] = pick
            clique_len += 1
            cand &= masks[pick]
        lb = clique_len
        # first-fit upper bound in index order
        for v in range(n):
            colors[v] = 0
        ub = 0
        for v in range(n):
            used_mask = 0
            m = masks[v]
            while m:
                u = _lowest(m)
                m &= m - 1
                if colors[u]:
                    used_mask |= (<u64>1) << (colors[u] - 1)
            c = 1
            while used_mask & ((<u64>1) << (c - 1)):
                c += 1
            colors[v] = c
            if c > ub:
                ub = c
        if lb == ub:
            return ub, [colors[v] for v in range(n)]
        for v in range(n):
            best_colors[v] = colors[v]
            colors[v] = 0
        for i in range(clique_len):
            colors[clique[i]] = i + 1
        st.n = n
        st.best = ub
        st.masks = masks
        st.colors = colors
        st.best_colors = best_colors
        st.degrees = degrees
        _chi_dfs(&st, lb, lb)
        return st.best, [best_colors[v] for v in range(n)]
    finally:
        free(masks); free(colors); free(best_colors); free(degrees); free(clique)


# ----------------------------------------------------------------- clique

cdef struct CliqueState:
    int best
    u64* masks
    u64* classes


cdef int _color_bound(CliqueState* st, u64 cand) noexcept:
    cdef int count = 0
    cdef int v, k
    cdef bint placed
    cdef u64 m = cand
    while m:
        v = _lowest(m)
        m &= m - 1
        placed = False
        for k in range(count):
            if not (st.masks[v] & st.classes[k]):
                st.classes[k] |= (<u64>1) << v
                placed = True
                break
        if not placed:
            st.classes[count] = (<u64>1) << v
            count += 1
    return count


cdef void _clique_expand(CliqueState* st, u64 cand, int size) noexcept:
    cdef int v, new_size
    cdef u64 sub
    while cand:
        if size + _popcount(cand) <= st.best:
            return
        v = _lowest(cand)
        cand &= cand - 1
        new_size = size + 1
        if new_size > st.best:
            st.best = new_size
        sub = cand & st.masks[v]
        if sub and new_size + _color_bound(st, sub) > st.best:
            _clique_expand(st, sub, new_size)


def max_clique(int n, masks_list):
    """Exact maximum clique size; see the pure version for the algorithm."""
    if n == 0:
        return 0
    if n > 63:
        raise ValueError("compiled kernel limited to 63 vertices")
    cdef u64* masks = <u64*> malloc(n * sizeof(u64))
    cdef u64* classes = <u64*> malloc(n * sizeof(u64))
    if masks == NULL or classes == NULL:
        free(masks); free(classes)
        raise MemoryError()
    cdef int v
    cdef CliqueState st
    try:
        for v in range(n):
            masks[v] = masks_list[v]
        st.best = 0
        st.masks = masks
        st.classes = classes
        _clique_expand(&st, ((<u64>1) << n) - 1, 0)
        return st.best
    finally:
        free(masks); free(classes)
