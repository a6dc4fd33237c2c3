# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels over 64-bit adjacency masks.

Mirrors :mod:`boxham._pykernels` function for function; results (including
node counts) must be identical, only faster.  Instances above 64 vertices
are routed to the pure backend by the wrapper.
"""

from libc.stdlib cimport free, malloc
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef long long TIME_CHECK_STRIDE = 4096

cdef inline int popcount(u64 x) nogil:
    return __builtin_popcountll(x)

cdef inline int ctz(u64 x) nogil:
    return __builtin_ctzll(x)

cdef inline double monotonic() nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef inline u64 full_mask(int n) nogil:
    # shifting a 64-bit word by 64 is undefined behavior in C
    if n >= 64:
        return ~(<u64> 0)
    return (<u64> 1 << n) - 1


cdef struct Budget:
    long long nodes
    long long max_nodes   # -1 means unlimited
    double deadline       # negative means none
    long long next_check


cdef inline int charge(Budget* b) nogil:
    b.nodes += 1
    if b.max_nodes >= 0 and b.nodes > b.max_nodes:
        return 1
    if b.deadline >= 0 and b.nodes >= b.next_check:
        b.next_check = b.nodes + TIME_CHECK_STRIDE
        if monotonic() > b.deadline:
            return 1
    return 0


cdef inline void init_budget(Budget* b, max_nodes, deadline):
    b.nodes = 0
    b.max_nodes = -1 if max_nodes is None else <long long> max_nodes
    b.deadline = -1.0 if deadline is None else <double> deadline
    b.next_check = TIME_CHECK_STRIDE


cdef inline bint connected_within(u64* adj, u64 region, u64 start_bit) nogil:
    cdef u64 seen = start_bit
    cdef u64 frontier = start_bit
    cdef u64 nxt, m, b
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & (0 - m)
            nxt |= adj[ctz(m)]
            m ^= b
        frontier = nxt & region & ~seen
        seen |= frontier
    return (seen & region) == region


cdef int components_c(u64* adj, u64 alive) nogil:
    cdef int count = 0
    cdef u64 rest = alive
    cdef u64 seed, seen, frontier, nxt, m, b
    while rest:
        seed = rest & (0 - rest)
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & (0 - m)
                nxt |= adj[ctz(m)]
                m ^= b
            frontier = nxt & alive & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


cdef int isolated_c(u64* adj, u64 alive) nogil:
    cdef int count = 0
    cdef u64 m = alive, b
    while m:
        b = m & (0 - m)
        if not (adj[ctz(m)] & alive):
            count += 1
        m ^= b
    return count


cdef u64* masks_to_c(int n, adj_list) except NULL:
    cdef u64* adj = <u64*> malloc(n * sizeof(u64))
    if adj == NULL:
        raise MemoryError()
    cdef int i
    for i in range(n):
        adj[i] = <u64> adj_list[i]
    return adj


def count_components(adj_list, alive):
    cdef int n = len(adj_list)
    cdef u64* adj = masks_to_c(n, adj_list)
    try:
        return components_c(adj, <u64> alive)
    finally:
        free(adj)


def count_isolated(adj_list, alive):
    cdef int n = len(adj_list)
    cdef u64* adj = masks_to_c(n, adj_list)
    try:
        return isolated_c(adj, <u64> alive)
    finally:
        free(adj)


# ---------------------------------------------------------------------------
# Hamiltonian cycle

cdef int _hc_extend(u64* adj, u64* forced, int n, u64 full,
                    int u, u64 visited, int prev, int* path, int depth,
                    Budget* bud) nogil:
    # 1 found, 0 exhausted, 2 budget
    if charge(bud):
        return 2
    cdef u64 rest = full & ~visited
    cdef u64 m, b, aw, cands, pbit
    cdef int w, avail, res
    if not rest:
        if not (adj[u] & 1):
            return 0
        if forced[u] & ~((<u64> 1 << prev) | <u64> 1):
            return 0
        if forced[0] & ~((<u64> 1 << path[1]) | (<u64> 1 << u)):
            return 0
        return 1
    m = rest
    while m:
        b = m & (0 - m)
        aw = adj[ctz(m)]
        m ^= b
        avail = popcount(aw & rest) + <int> ((aw >> u) & 1) + <int> (aw & 1)
        if avail < 2:
            return 0
    if not (adj[0] & rest):
        return 0
    if not connected_within(adj, rest | (<u64> 1 << u), <u64> 1 << u):
        return 0
    cands = adj[u] & rest
    pbit = (<u64> 1 << prev) if prev >= 0 else 0
    while cands:
        b = cands & (0 - cands)
        cands ^= b
        if prev >= 0 and (forced[u] & ~(pbit | b)):
            continue
        w = ctz(b)
        path[depth] = w
        res = _hc_extend(adj, forced, n, full, w, visited | b, u, path, depth + 1, bud)
        if res:
            return res
    return 0


def ham_cycle(n, adj_list, max_nodes=None, deadline=None):
    if n == 1:
        return ("none", None, 0)
    if n == 2:
        if adj_list[0] & 2:
            return ("found", (0, 1), 0)
        return ("none", None, 0)
    cdef u64 full = full_mask(n)
    cdef u64* adj = masks_to_c(n, adj_list)
    cdef u64* forced = <u64*> malloc(n * sizeof(u64))
    cdef int* path = <int*> malloc(n * sizeof(int))
    cdef int v, res
    cdef u64 f, m, b
    cdef Budget bud
    if forced == NULL or path == NULL:
        free(adj); free(forced); free(path)
        raise MemoryError()
    try:
        for v in range(n):
            if popcount(adj[v]) < 2:
                return ("none", None, 0)
        for v in range(n):
            f = 0
            m = adj[v]
            while m:
                b = m & (0 - m)
                if popcount(adj[ctz(m)]) == 2:
                    f |= b
                m ^= b
            if popcount(f) > 2:
                return ("none", None, 0)
            forced[v] = f
        init_budget(&bud, max_nodes, deadline)
        path[0] = 0
        res = _hc_extend(adj, forced, n, full, 0, 1, -1, path, 1, &bud)
        if res == 2:
            return ("unknown", None, bud.nodes)
        if res == 1:
            return ("found", tuple(path[i] for i in range(n)), bud.nodes)
        return ("none", None, bud.nodes)
    finally:
        free(adj); free(forced); free(path)


# ---------------------------------------------------------------------------
# spanning path

cdef int _hp_extend(u64* adj, int n, u64 full, int u, u64 visited,
                    int* path, int depth, Budget* bud) nogil:
    if charge(bud):
        return 2
    cdef u64 rest = full & ~visited
    cdef u64 m, b, aw, cands
    cdef int avail, weak = 0, w, res
    if not rest:
        return 1
    m = rest
    while m:
        b = m & (0 - m)
        aw = adj[ctz(m)]
        m ^= b
        avail = popcount(aw & rest) + <int> ((aw >> u) & 1)
        if avail == 0:
            return 0
        if avail == 1:
            weak += 1
            if weak > 1:
                return 0
    if not connected_within(adj, rest | (<u64> 1 << u), <u64> 1 << u):
        return 0
    cands = adj[u] & rest
    while cands:
        b = cands & (0 - cands)
        cands ^= b
        w = ctz(b)
        path[depth] = w
        res = _hp_extend(adj, n, full, w, visited | b, path, depth + 1, bud)
        if res:
            return res
    return 0


def ham_path(n, adj_list, max_nodes=None, deadline=None):
    if n == 1:
        return ("found", (0,), 0)
    cdef u64 full = full_mask(n)
    cdef u64* adj = masks_to_c(n, adj_list)
    cdef int* path = <int*> malloc(n * sizeof(int))
    cdef int v, s, res
    cdef int first_leaf = -1, leaves = 0
    cdef Budget bud
    if path == NULL:
        free(adj)
        raise MemoryError()
    try:
        for v in range(n):
            if popcount(adj[v]) == 0:
                return ("none", None, 0)
            if popcount(adj[v]) == 1:
                leaves += 1
                if first_leaf < 0:
                    first_leaf = v
        if leaves > 2:
            return ("none", None, 0)
        init_budget(&bud, max_nodes, deadline)
        if first_leaf >= 0:
            path[0] = first_leaf
            res = _hp_extend(adj, n, full, first_leaf, <u64> 1 << first_leaf,
                             path, 1, &bud)
            if res == 2:
                return ("unknown", None, bud.nodes)
            if res == 1:
                return ("found", tuple(path[i] for i in range(n)), bud.nodes)
            return ("none", None, bud.nodes)
        for s in range(n):
            path[0] = s
            res = _hp_extend(adj, n, full, s, <u64> 1 << s, path, 1, &bud)
            if res == 2:
                return ("unknown", None, bud.nodes)
            if res == 1:
                return ("found", tuple(path[i] for i in range(n)), bud.nodes)
        return ("none", None, bud.nodes)
    finally:
        free(adj); free(path)


# ---------------------------------------------------------------------------
# scattering maximization

cdef struct ScatState:
    long long best_val
    u64 best_mask
    int have_best
    int stopped
    long long prune_at
    int have_prune
    long long stop_above
    int have_stop


cdef inline int greedy_matching(u64* adj, u64 alive) nogil:
    cdef int size = 0
    cdef u64 avail = alive, b, cand
    while avail:
        b = avail & (0 - avail)
        avail ^= b
        cand = adj[ctz(b)] & avail
        if cand:
            avail ^= cand & (0 - cand)
            size += 1
    return size


cdef int _scat(u64* adj, int n, u64 full, int idx, u64 s_mask, u64 kept,
               ScatState* st, Budget* bud) nogil:
    # 0 ok, 2 budget
    if st.stopped:
        return 0
    if charge(bud):
        return 2
    cdef int c
    cdef long long val, ub, floor
    cdef int have_floor
    cdef u64 undecided, bit
    if idx == n:
        c = components_c(adj, kept)
        if c >= 2:
            val = c - popcount(s_mask)
            if not st.have_best or val > st.best_val:
                st.best_val = val
                st.best_mask = s_mask
                st.have_best = 1
                if st.have_stop and val > st.stop_above:
                    st.stopped = 1
        return 0
    undecided = full & ~((<u64> 1 << idx) - 1)
    ub = (components_c(adj, kept)
          + popcount(undecided) - greedy_matching(adj, undecided)
          - popcount(s_mask))
    have_floor = st.have_prune
    floor = st.prune_at
    if st.have_best and (not have_floor or st.best_val > floor):
        floor = st.best_val
        have_floor = 1
    if have_floor and ub <= floor:
        return 0
    bit = <u64> 1 << idx
    if not (adj[idx] & (full & ~s_mask & ~bit)):
        return _scat(adj, n, full, idx + 1, s_mask, kept | bit, st, bud)
    if _scat(adj, n, full, idx + 1, s_mask | bit, kept, st, bud):
        return 2
    if not st.stopped:
        return _scat(adj, n, full, idx + 1, s_mask, kept | bit, st, bud)
    return 0


def scattering_max(n, adj_list, prune_at=None, stop_above=None,
                   max_nodes=None, deadline=None):
    cdef u64 full = full_mask(n)
    cdef u64* adj = masks_to_c(n, adj_list)
    cdef ScatState st
    cdef Budget bud
    cdef int res
    st.best_val = 0
    st.best_mask = 0
    st.have_best = 0
    st.stopped = 0
    st.have_prune = prune_at is not None
    st.prune_at = prune_at if prune_at is not None else 0
    st.have_stop = stop_above is not None
    st.stop_above = stop_above if stop_above is not None else 0
    init_budget(&bud, max_nodes, deadline)
    try:
        res = _scat(adj, n, full, 0, 0, 0, &st, &bud)
        best_val = st.best_val if st.have_best else None
        best_mask = st.best_mask if st.have_best else None
        if res == 2:
            return ("unknown", best_val, best_mask, bud.nodes)
        status = "stopped" if st.stopped else "complete"
        return (status, best_val, best_mask, bud.nodes)
    finally:
        free(adj)


# ---------------------------------------------------------------------------
# exact toughness scan

cdef inline bint lex_smaller(u64 a, u64 b) nogil:
    cdef u64 diff
    if a == b:
        return False
    diff = a ^ b
    return (a & (diff & (0 - diff))) != 0


def toughness_scan(n, adj_list):
    cdef u64 full = full_mask(n)
    cdef u64* adj = masks_to_c(n, adj_list)
    cdef u64 mask, alive
    cdef u64 best_mask = 0
    cdef int best_size = 0, best_c = 0
    cdef int have = 0, c, size
    cdef long long lhs, rhs
    try:
        mask = 0
        while True:
            alive = full & ~mask
            if alive:
                c = components_c(adj, alive)
                if c >= 2:
                    size = popcount(mask)
                    if not have:
                        best_size, best_c, best_mask = size, c, mask
                        have = 1
                    else:
                        lhs = <long long> size * best_c
                        rhs = <long long> best_size * c
                        if lhs < rhs or (lhs == rhs and (size < best_size or
                                (size == best_size and lex_smaller(mask, best_mask)))):
                            best_size, best_c, best_mask = size, c, mask
            if mask == full:
                break
            mask += 1
        if not have:
            return None
        return (best_size, best_c, best_mask)
    finally:
        free(adj)
