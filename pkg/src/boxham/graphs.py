"""Simple undirected graphs on vertices 1..n and deterministic operations.

The :class:`Graph` value is the universal carrier for the whole package:
immutable, hashable, with neighbor iteration always in ascending vertex
order so that every search built on top of it is reproducible.

Cartesian products use the fixed vertex encoding

    id(i, v) = (i - 1) * base_order + v

where ``i`` is the vertex of the first factor (the "layer") and ``v`` a
vertex of the second factor, so certificates and cycle files are portable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (
    CyclicSeedError,
    DisconnectedError,
    MalformedGraphError,
    NotBipartiteError,
    NotSubgraphError,
)

Edge = tuple[int, int]


def canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..order.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``.  Use
    :meth:`from_edges` to build one from arbitrary pair iterables; the
    direct constructor insists on canonical input.
    """

    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("graph order must be positive")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u < v <= self.order):
                raise ValueError(f"edge {e} not canonical for order {self.order}")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")

    @staticmethod
    def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        canon = sorted({canon_edge(u, v) for u, v in edges})
        return Graph(order, tuple(canon))

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.order + 1)

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.order + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        # edge list is sorted, but the v->u direction arrives out of order
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return canon_edge(u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks, 0-indexed; the kernel input format."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)


class DegreeStats(NamedTuple):
    maximum: int
    minimum: int
    degrees: dict[int, int]


@dataclass(frozen=True)
class Bipartition:
    """Deterministic 2-coloring: each component's smallest vertex is in side_a."""

    side_a: frozenset[int]
    side_b: frozenset[int]

    def side_of(self, v: int) -> str:
        return "a" if v in self.side_a else "b"


# ---------------------------------------------------------------------------
# constructors


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(1, n) for v in range(u + 1, n + 1)))


def star_graph(leaves: int) -> Graph:
    """Star with center labeled 1 and leaves 2..leaves+1."""
    return Graph.from_edges(leaves + 1, ((1, v) for v in range(2, leaves + 2)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))


# ---------------------------------------------------------------------------
# structural predicates


def is_connected(g: Graph) -> bool:
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    for root in g.vertices():
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_tree(g: Graph) -> bool:
    return g.size == g.order - 1 and is_connected(g)


def degree_stats(g: Graph) -> DegreeStats:
    degrees = {v: g.degree(v) for v in g.vertices()}
    return DegreeStats(max(degrees.values()), min(degrees.values()), degrees)


def bipartition(g: Graph) -> Bipartition:
    """2-color the graph, rooting each component at its smallest vertex.

    Raises :class:`NotBipartiteError` when an odd cycle exists.
    """
    color: dict[int, int] = {}
    for root in g.vertices():
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop(0)
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    raise NotBipartiteError(f"odd cycle through edge ({u}, {w})")
    side_a = frozenset(v for v, c in color.items() if c == 0)
    side_b = frozenset(v for v, c in color.items() if c == 1)
    return Bipartition(side_a, side_b)


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartiteError:
        return False
    return True


def bridges(g: Graph) -> tuple[Edge, ...]:
    """Cut-edges, found with the usual DFS lowpoint sweep."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[Edge] = []
    counter = 0
    for root in g.vertices():
        if root in disc:
            continue
        # iterative DFS; (vertex, parent, neighbor iterator)
        stack = [(root, 0, iter(g.neighbors(root)))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.append(canon_edge(p, u))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Cartesian product


def product_order(layers: int, base_order: int) -> int:
    return layers * base_order


def product_id(layer: int, base: int, base_order: int) -> int:
    """Encode a product vertex; bijection from (1..n) x (1..base_order)."""
    return (layer - 1) * base_order + base


def product_label(pid: int, base_order: int) -> tuple[int, int]:
    """Inverse of :func:`product_id`: returns (layer, base)."""
    return (pid - 1) // base_order + 1, (pid - 1) % base_order + 1


def format_label(layer: int, base: int) -> str:
    return f"{layer}_{base}"


_LABEL_RE = re.compile(r"^(\d+)_(\d+)$")


def parse_label(token: str) -> tuple[int, int]:
    m = _LABEL_RE.match(token)
    if not m:
        raise MalformedGraphError(f"bad vertex label {token!r}")
    return int(m.group(1)), int(m.group(2))


def cartesian_product(g1: Graph, h: Graph) -> Graph:
    """Cartesian product with g1 supplying layers and h the base.

    Vertex count is ``g1.order * h.order``; an edge joins two vertices
    when they agree in one coordinate and are adjacent in the other, so
    the edge count is ``g1.order * h.size + h.order * g1.size``.
    """
    k = h.order
    edges: list[Edge] = []
    for i in g1.vertices():
        for u, w in h.edges:
            edges.append((product_id(i, u, k), product_id(i, w, k)))
    for i, j in g1.edges:
        for v in h.vertices():
            edges.append((product_id(i, v, k), product_id(j, v, k)))
    return Graph.from_edges(g1.order * k, edges)


# ---------------------------------------------------------------------------
# spanning trees


def spanning_tree_containing(g: Graph, seed: Iterable[tuple[int, int]]) -> Graph:
    """Deterministic spanning tree of ``g`` containing every seed edge.

    The seed forest is completed by scanning the remaining edges ordered
    by (larger endpoint, smaller endpoint), which pins a unique result.
    """
    seed_edges = [canon_edge(u, v) for u, v in seed]
    for e in seed_edges:
        if e not in g._edge_set:
            raise NotSubgraphError(f"seed edge {e} not in the graph")
    parent = list(range(g.order + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen: set[Edge] = set()
    for u, v in sorted(set(seed_edges)):
        ru, rv = find(u), find(v)
        if ru == rv:
            raise CyclicSeedError("seed edges contain a cycle")
        parent[ru] = rv
        chosen.add((u, v))
    if not is_connected(g):
        raise DisconnectedError("cannot span a disconnected graph")
    for u, v in sorted(g.edges, key=lambda e: (e[1], e[0])):
        if len(chosen) == g.order - 1:
            break
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add((u, v))
    return Graph.from_edges(g.order, chosen)


# ---------------------------------------------------------------------------
# text formats


def parse_graph(text: str) -> Graph:
    """Read the edge-list format: header "order edgecount", then "u v" lines."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise MalformedGraphError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedGraphError(f"bad header {lines[0]!r}")
    try:
        order, count = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedGraphError(f"bad header {lines[0]!r}") from None
    if order < 1 or count < 0:
        raise MalformedGraphError(f"bad header {lines[0]!r}")
    if len(lines) - 1 != count:
        raise MalformedGraphError(f"expected {count} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedGraphError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedGraphError(f"bad edge line {ln!r}") from None
        if u == v:
            raise MalformedGraphError(f"loop at vertex {u}")
        if not (1 <= u <= order and 1 <= v <= order):
            raise MalformedGraphError(f"endpoint out of range in {ln!r}")
        e = canon_edge(u, v)
        if e in seen:
            raise MalformedGraphError(f"duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    return Graph.from_edges(order, edges)


def format_graph(g: Graph) -> str:
    """Canonical edge-list text; parse(format(g)) == g."""
    out = [f"{g.order} {g.size}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def to_dot(g: Graph, *, layers: int | None = None, bold: Iterable[tuple[int, int]] = (),
           name: str = "G") -> str:
    """DOT text for an undirected graph.

    With ``layers`` set, vertices are labeled "i_v" under the fixed
    product encoding; edges in ``bold`` (e.g. a constructed cycle) are
    drawn with style=bold.
    """
    if layers is not None:
        if g.order % layers:
            raise ValueError("order not divisible by layer count")
        base = g.order // layers

        def label(v: int) -> str:
            return format_label(*product_label(v, base))
    else:
        def label(v: int) -> str:
            return str(v)

    bold_set = {canon_edge(u, v) for u, v in bold}
    out = [f"graph {name} {{"]
    for v in g.vertices():
        out.append(f'  "{label(v)}";')
    for u, v in g.edges:
        attr = " [style=bold]" if (u, v) in bold_set else ""
        out.append(f'  "{label(u)}" -- "{label(v)}"{attr};')
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# small-order isomorphism (exhaustive backtracking; test-scale only)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by backtracking; intended for small orders."""
    if g1.order != g2.order or g1.size != g2.size:
        return False
    n = g1.order
    deg1 = sorted(g1.degree(v) for v in g1.vertices())
    deg2 = sorted(g2.degree(v) for v in g2.vertices())
    if deg1 != deg2:
        return False
    # map vertices of g1 (in decreasing degree order) onto g2
    order1 = sorted(g1.vertices(), key=lambda v: (-g1.degree(v), v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        u = order1[idx]
        for w in g2.vertices():
            if w in used or g2.degree(w) != g1.degree(u):
                continue
            ok = True
            for x in g1.neighbors(u):
                if x in mapping and not g2.has_edge(mapping[x], w):
                    ok = False
                    break
            if ok:
                # non-edges must map to non-edges too
                for x, y in mapping.items():
                    if x not in g1._adjacency[u] and x != u and g2.has_edge(y, w):
                        ok = False
                        break
            if ok:
                mapping[u] = w
                used.add(w)
                if extend(idx + 1):
                    return True
                del mapping[u]
                used.remove(w)
        return False

    return extend(0)


__all__ = [
    "Bipartition",
    "DegreeStats",
    "Edge",
    "Graph",
    "bipartition",
    "bridges",
    "canon_edge",
    "cartesian_product",
    "complete_bipartite",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "degree_stats",
    "format_graph",
    "format_label",
    "is_bipartite",
    "is_connected",
    "is_tree",
    "isomorphic",
    "parse_graph",
    "parse_label",
    "path_graph",
    "product_id",
    "product_label",
    "spanning_tree_containing",
    "star_graph",
    "to_dot",
]
