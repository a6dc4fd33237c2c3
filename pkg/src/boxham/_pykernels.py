"""Pure-Python search kernels over bitmask adjacency.

This is the fallback backend; ``boxham._ckernels`` implements the same
functions in Cython and must agree with these bit for bit.  Vertices are
0-indexed bit positions here; wrappers in :mod:`boxham.kernels` translate
from the 1-indexed Graph world.

All searches are deterministic: candidates are visited in ascending bit
order and budgets are checked at fixed points.
"""

from __future__ import annotations

import time

_TIME_CHECK_STRIDE = 4096


class _OutOfBudget(Exception):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _lowest(x: int) -> int:
    return (x & -x).bit_length() - 1


def _connected_within(adj, region: int, start_bit: int) -> bool:
    """True when every bit of ``region`` is reachable from start_bit inside region."""
    seen = start_bit
    frontier = start_bit
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            m ^= b
            nxt |= adj[b.bit_length() - 1]
        frontier = nxt & region & ~seen
        seen |= frontier
    return seen & region == region


def count_components(adj, alive: int) -> int:
    count = 0
    rest = alive
    while rest:
        seed = rest & -rest
        seen = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & alive & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def count_isolated(adj, alive: int) -> int:
    count = 0
    m = alive
    while m:
        b = m & -m
        m ^= b
        if not adj[b.bit_length() - 1] & alive:
            count += 1
    return count


class _Budget:
    __slots__ = ("nodes", "max_nodes", "deadline", "next_check")

    def __init__(self, max_nodes, deadline):
        self.nodes = 0
        self.max_nodes = max_nodes
        self.deadline = deadline
        self.next_check = _TIME_CHECK_STRIDE

    def charge(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes >= self.next_check:
            self.next_check = self.nodes + _TIME_CHECK_STRIDE
            if time.monotonic() > self.deadline:
                raise _OutOfBudget


# ---------------------------------------------------------------------------
# Hamiltonian cycle


def ham_cycle(n, adj, max_nodes=None, deadline=None):
    """Exhaustive Hamiltonian cycle search from vertex 0.

    Returns (status, order, nodes) with status "found" | "none" | "unknown".
    A 2-vertex graph with an edge counts as the degenerate closed walk
    [0, 1]; callers that reject it must do so themselves.

    Pruning: every unvisited vertex must keep two usable connections, the
    unvisited region must stay connected through the path head, and edges
    forced by degree-2 vertices must be respected.
    """
    if n == 1:
        return ("none", None, 0)
    if n == 2:
        if adj[0] & 2:
            return ("found", (0, 1), 0)
        return ("none", None, 0)
    full = (1 << n) - 1
    deg = [_popcount(a) for a in adj]
    if min(deg) < 2:
        return ("none", None, 0)
    # forced[v]: neighbors of v of degree 2; both of a degree-2 vertex's
    # edges lie on every Hamiltonian cycle
    forced = [0] * n
    for v in range(n):
        f = 0
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            if deg[b.bit_length() - 1] == 2:
                f |= b
        if _popcount(f) > 2:
            return ("none", None, 0)
        forced[v] = f

    budget = _Budget(max_nodes, deadline)
    path = [0]

    def extend(u: int, visited: int, prev: int) -> bool:
        budget.charge()
        rest = full & ~visited
        if not rest:
            if not adj[u] & 1:
                return False
            if forced[u] & ~((1 << prev) | 1):
                return False
            if forced[0] & ~((1 << path[1]) | (1 << u)):
                return False
            return True
        # each unvisited vertex needs >= 2 connections among the unvisited
        # region, the path head, and the start vertex
        m = rest
        while m:
            b = m & -m
            m ^= b
            aw = adj[b.bit_length() - 1]
            avail = _popcount(aw & rest) + ((aw >> u) & 1) + (aw & 1)
            if avail < 2:
                return False
        if not adj[0] & rest:
            return False
        if not _connected_within(adj, rest | (1 << u), 1 << u):
            return False
        cands = adj[u] & rest
        pbit = (1 << prev) if prev >= 0 else 0
        while cands:
            b = cands & -cands
            cands ^= b
            if prev >= 0 and forced[u] & ~(pbit | b):
                continue
            w = b.bit_length() - 1
            path.append(w)
            if extend(w, visited | b, u):
                return True
            path.pop()
        return False

    try:
        found = extend(0, 1, -1)
    except _OutOfBudget:
        return ("unknown", None, budget.nodes)
    if found:
        return ("found", tuple(path), budget.nodes)
    return ("none", None, budget.nodes)


# ---------------------------------------------------------------------------
# spanning path


def ham_path(n, adj, max_nodes=None, deadline=None):
    """Exhaustive spanning-path search; same result convention as ham_cycle.

    Degree-1 vertices must be path endpoints, so when any exist the search
    only starts from the smallest one.
    """
    if n == 1:
        return ("found", (0,), 0)
    full = (1 << n) - 1
    deg = [_popcount(a) for a in adj]
    if min(deg) == 0:
        return ("none", None, 0)
    ones = [v for v in range(n) if deg[v] == 1]
    if len(ones) > 2:
        return ("none", None, 0)
    starts = [ones[0]] if ones else list(range(n))

    budget = _Budget(max_nodes, deadline)
    path: list[int] = []

    def extend(u: int, visited: int) -> bool:
        budget.charge()
        rest = full & ~visited
        if not rest:
            return True
        # every unvisited vertex needs a live connection; at most one may
        # rely on a single connection (it must then end the path)
        weak = 0
        m = rest
        while m:
            b = m & -m
            m ^= b
            aw = adj[b.bit_length() - 1]
            avail = _popcount(aw & rest) + ((aw >> u) & 1)
            if avail == 0:
                return False
            if avail == 1:
                weak += 1
                if weak > 1:
                    return False
        if not _connected_within(adj, rest | (1 << u), 1 << u):
            return False
        cands = adj[u] & rest
        while cands:
            b = cands & -cands
            cands ^= b
            w = b.bit_length() - 1
            path.append(w)
            if extend(w, visited | b):
                return True
            path.pop()
        return False

    try:
        for s in starts:
            path = [s]
            if extend(s, 1 << s):
                return ("found", tuple(path), budget.nodes)
    except _OutOfBudget:
        return ("unknown", None, budget.nodes)
    return ("none", None, budget.nodes)


# ---------------------------------------------------------------------------
# scattering maximization (branch and bound)


def _greedy_matching(adj, alive: int) -> int:
    size = 0
    avail = alive
    while avail:
        b = avail & -avail
        avail ^= b
        cand = adj[b.bit_length() - 1] & avail
        if cand:
            avail ^= cand & -cand
            size += 1
    return size


def scattering_max(n, adj, prune_at=None, stop_above=None,
                   max_nodes=None, deadline=None):
    """Maximize c(G - S) - |S| over cut sets S (at least 2 components).

    Returns (status, best_value, best_mask, nodes).  ``best_value`` is None
    when no cut set exists (complete graphs).  Status "complete" means the
    search space was exhausted, "stopped" that a value above ``stop_above``
    triggered the early exit, "unknown" that the budget ran out.

    ``prune_at`` drops subtrees whose upper bound is at most
    max(best_so_far, prune_at); with it the returned value is exact only
    when above the floor, which is all a threshold decision needs.

    The bound: putting every undecided vertex back can add at most one
    component each, tempered by a greedy matching on the undecided part
    (two matched vertices cannot both open new components).
    """
    full = (1 << n) - 1
    budget = _Budget(max_nodes, deadline)
    best_val = None
    best_mask = None
    stopped = False

    def rec(idx: int, s_mask: int, kept: int):
        nonlocal best_val, best_mask, stopped
        if stopped:
            return
        budget.charge()
        if idx == n:
            c = count_components(adj, kept)
            if c >= 2:
                val = c - _popcount(s_mask)
                if best_val is None or val > best_val:
                    best_val = val
                    best_mask = s_mask
                    if stop_above is not None and val > stop_above:
                        stopped = True
            return
        undecided = full & ~((1 << idx) - 1)
        ub = (count_components(adj, kept)
              + _popcount(undecided) - _greedy_matching(adj, undecided)
              - _popcount(s_mask))
        floor = prune_at
        if best_val is not None and (floor is None or best_val > floor):
            floor = best_val
        if floor is not None and ub <= floor:
            return
        bit = 1 << idx
        if not adj[idx] & (full & ~s_mask & ~bit):
            # all neighbors already removed: keeping idx is free and adds a
            # component, so the S branch is dominated
            rec(idx + 1, s_mask, kept | bit)
            return
        rec(idx + 1, s_mask | bit, kept)
        if not stopped:
            rec(idx + 1, s_mask, kept | bit)

    try:
        rec(0, 0, 0)
    except _OutOfBudget:
        return ("unknown", best_val, best_mask, budget.nodes)
    status = "stopped" if stopped else "complete"
    return (status, best_val, best_mask, budget.nodes)


# ---------------------------------------------------------------------------
# exact toughness scan


def _lex_smaller(a: int, b: int) -> bool:
    """Order on equal-size vertex sets: ascending-tuple lexicographic."""
    if a == b:
        return False
    diff = a ^ b
    return bool(a & (diff & -diff))


def toughness_scan(n, adj):
    """Minimize |S| / c(G - S) over all cut sets by full subset scan.

    Returns (size, components, mask) for the best cut, preferring smaller
    |S| and then the lexicographically least set on ties; None when no cut
    set exists.
    """
    best = None  # (size, comps, mask)
    for mask in range(1 << n):
        alive = ((1 << n) - 1) & ~mask
        if not alive:
            continue
        c = count_components(adj, alive)
        if c < 2:
            continue
        size = _popcount(mask)
        if best is None:
            best = (size, c, mask)
            continue
        bs, bc, bm = best
        # size/c < bs/bc  <=>  size*bc < bs*c
        lhs = size * bc
        rhs = bs * c
        if lhs < rhs or (lhs == rhs and (size < bs or (size == bs and _lex_smaller(mask, bm)))):
            best = (size, c, mask)
    return best
