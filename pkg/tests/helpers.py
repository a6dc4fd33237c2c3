"""Shared instance generators for the test suite."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from boxham.graphs import Graph, is_connected, isomorphic


def random_connected_graph(rng: random.Random, min_order: int = 2,
                           max_order: int = 10) -> Graph:
    """Random tree by attachment plus random extra edges; always connected.

    The extra-edge probability is itself random per graph, so the sample
    mixes trees, sparse graphs, and fairly dense ones.
    """
    n = rng.randint(min_order, max_order)
    edges = [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]
    extra_p = rng.random() * 0.6
    for u in range(1, n):
        for v in range(u + 1, n + 1):
            if (u, v) not in edges and rng.random() < extra_p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_connected_bipartite(rng: random.Random, min_order: int = 2,
                               max_order: int = 10) -> Graph:
    n = rng.randint(min_order, max_order)
    a = rng.randint(1, n - 1)
    left = list(range(1, a + 1))
    right = list(range(a + 1, n + 1))
    # spanning skeleton first, then random cross edges
    edges = set()
    for v in right:
        edges.add((rng.choice(left), v))
    for u in left[1:]:
        if not any(e[0] == u for e in edges):
            edges.add((u, rng.choice(right)))
    for u in left:
        for v in right:
            if rng.random() < 0.3:
                edges.add((u, v))
    g = Graph.from_edges(n, edges)
    if not is_connected(g):
        # rare when several left vertices share no right partner; just retry
        return random_connected_bipartite(rng, min_order, max_order)
    return g


def _degree_profile(g: Graph) -> tuple:
    degs = {v: g.degree(v) for v in g.vertices()}
    return tuple(sorted(
        (degs[v], tuple(sorted(degs[w] for w in g.neighbors(v))))
        for v in g.vertices()))


@lru_cache(maxsize=None)
def connected_bipartite_up_to_iso(max_order: int) -> tuple[Graph, ...]:
    """Every connected bipartite graph with 2..max_order vertices, one per
    isomorphism class.

    Enumerates subgraphs of K_{a,b} over all splits a <= b, filters to
    connected, and deduplicates with profile buckets plus the exact
    backtracking test.  Sized for max_order around 7.
    """
    assert max_order <= 8, "labeled enumeration blows up beyond order 8"
    found: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for n in range(2, max_order + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            cross = [(u, v) for u in range(1, a + 1) for v in range(a + 1, n + 1)]
            for bits in range(1 << len(cross)):
                edges = [cross[i] for i in range(len(cross)) if bits >> i & 1]
                if len(edges) < n - 1:
                    continue
                g = Graph.from_edges(n, edges)
                if not is_connected(g):
                    continue
                key = (n, g.size, _degree_profile(g))
                bucket = buckets.setdefault(key, [])
                if any(isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                found.append(g)
    return tuple(found)


def all_pairs(items):
    return itertools.combinations(items, 2)
