import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxham.errors import (
    CyclicSeedError,
    DisconnectedError,
    MalformedGraphError,
    NotBipartiteError,
    NotSubgraphError,
)
from boxham.graphs import (
    Graph,
    bipartition,
    bridges,
    cartesian_product,
    complete_graph,
    cycle_graph,
    degree_stats,
    format_graph,
    is_connected,
    is_tree,
    isomorphic,
    parse_graph,
    path_graph,
    product_id,
    product_label,
    spanning_tree_containing,
    star_graph,
    to_dot,
)
from helpers import random_connected_graph

T1_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (4, 8)]


@st.composite
def graphs_strategy(draw, max_order=8):
    n = draw(st.integers(min_value=1, max_value=max_order))
    pairs = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


class TestGraphBasics:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(1, 3)])

    def test_dedupes_reversed(self):
        g = Graph.from_edges(3, [(2, 1), (1, 2), (2, 3)])
        assert g.edges == ((1, 2), (2, 3))

    def test_neighbors_ascending(self):
        g = Graph.from_edges(5, [(3, 5), (1, 3), (2, 3), (3, 4)])
        assert g.neighbors(3) == (1, 2, 4, 5)


class TestProduct:
    def test_smallest_product_is_square(self):
        g = cartesian_product(path_graph(2), path_graph(2))
        assert g.order == 4 and g.size == 4
        assert is_connected(g) and not is_tree(g)

    def test_p10_p3_counts(self):
        g = cartesian_product(path_graph(10), path_graph(3))
        assert (g.order, g.size) == (30, 47)

    def test_p4_t1_counts(self):
        t1 = Graph.from_edges(8, T1_EDGES)
        g = cartesian_product(path_graph(4), t1)
        assert (g.order, g.size) == (32, 52)

    def test_label_encoding_roundtrip(self):
        for layer in range(1, 5):
            for base in range(1, 4):
                pid = product_id(layer, base, 3)
                assert product_label(pid, 3) == (layer, base)
        assert sorted(product_id(i, v, 3) for i in range(1, 5)
                      for v in range(1, 4)) == list(range(1, 13))

    @given(graphs_strategy(max_order=4), graphs_strategy(max_order=3))
    @settings(max_examples=60, deadline=None)
    def test_edge_count_formula(self, g1, h):
        prod = cartesian_product(g1, h)
        assert prod.size == g1.order * h.size + h.order * g1.size

    def test_product_symmetry_small(self):
        cases = [
            (path_graph(2), path_graph(3)),
            (path_graph(3), star_graph(2)),
            (cycle_graph(3), path_graph(2)),
            (path_graph(5), path_graph(2)),
            (star_graph(3), path_graph(2)),
        ]
        for g1, h in cases:
            a = cartesian_product(g1, h)
            b = cartesian_product(h, g1)
            assert a.order == b.order and a.size == b.size
            assert sorted(a.degree(v) for v in a.vertices()) == \
                   sorted(b.degree(v) for v in b.vertices())
            if a.order <= 10:
                assert isomorphic(a, b)


class TestPredicates:
    def test_connected(self):
        assert is_connected(path_graph(3))
        assert not is_connected(Graph.from_edges(4, [(1, 2), (3, 4)]))
        assert is_connected(Graph.from_edges(8, T1_EDGES))

    def test_degree_stats(self):
        t1 = Graph.from_edges(8, T1_EDGES)
        stats = degree_stats(t1)
        assert (stats.maximum, stats.minimum) == (3, 1)
        assert stats.degrees[2] == 3 and stats.degrees[5] == 1
        assert degree_stats(complete_graph(4))[:2] == (3, 3)
        assert degree_stats(path_graph(2))[:2] == (1, 1)

    def test_bipartition_sides(self):
        bip = bipartition(cycle_graph(4))
        assert {len(bip.side_a), len(bip.side_b)} == {2}
        with pytest.raises(NotBipartiteError):
            bipartition(cycle_graph(5))

    def test_bipartition_product_sides(self):
        t1 = Graph.from_edges(8, T1_EDGES)
        prod = cartesian_product(path_graph(4), t1)
        bip = bipartition(prod)
        assert len(bip.side_a) == len(bip.side_b) == 16
        assert 1 in bip.side_a

    @given(graphs_strategy())
    @settings(max_examples=80, deadline=None)
    def test_bipartition_colors_every_edge(self, g):
        try:
            bip = bipartition(g)
        except NotBipartiteError:
            return
        for u, v in g.edges:
            assert (u in bip.side_a) != (v in bip.side_a)

    def test_bridges(self):
        assert bridges(path_graph(4)) == ((1, 2), (2, 3), (3, 4))
        assert bridges(cycle_graph(5)) == ()
        assert bridges(complete_graph(4)) == ()


class TestSpanningTree:
    def test_square_completion(self):
        tree = spanning_tree_containing(cycle_graph(4), [(1, 2), (3, 4)])
        assert tree.edges == ((1, 2), (2, 3), (3, 4))

    def test_k4_completion(self):
        tree = spanning_tree_containing(complete_graph(4), [(1, 2), (3, 4)])
        assert tree.edges == ((1, 2), (1, 3), (3, 4))

    def test_tree_is_fixed_point(self):
        t1 = Graph.from_edges(8, T1_EDGES)
        assert spanning_tree_containing(t1, t1.edges) == t1

    def test_errors(self):
        with pytest.raises(CyclicSeedError):
            spanning_tree_containing(complete_graph(4), [(1, 2), (2, 3), (1, 3)])
        with pytest.raises(NotSubgraphError):
            spanning_tree_containing(path_graph(4), [(1, 4)])
        with pytest.raises(DisconnectedError):
            spanning_tree_containing(Graph.from_edges(4, [(1, 2), (3, 4)]), [(1, 2)])

    def test_random_instances_contain_seed(self):
        rng = random.Random(11)
        for _ in range(60):
            g = random_connected_graph(rng, 3, 9)
            seed_tree = spanning_tree_containing(g, [])
            seed = [e for i, e in enumerate(seed_tree.edges) if i % 2 == 0]
            tree = spanning_tree_containing(g, seed)
            assert is_tree(tree)
            assert set(seed) <= set(tree.edges) <= set(g.edges)


class TestTextFormats:
    def test_parse_p2(self):
        assert parse_graph("2 1\n1 2\n") == path_graph(2)

    def test_parse_t1(self):
        text = "8 7\n1 2\n2 3\n3 4\n4 5\n2 6\n3 7\n4 8\n"
        assert parse_graph(text) == Graph.from_edges(8, T1_EDGES)

    def test_parse_fig4(self):
        text = "6 5\n1 2\n2 3\n3 4\n2 5\n3 6\n"
        g = parse_graph(text)
        assert g.order == 6 and g.size == 5
        assert degree_stats(g).degrees[2] == 3

    @pytest.mark.parametrize("bad", [
        "",
        "x y\n",
        "2\n",
        "2 2\n1 2\n",
        "2 1\n1 2\n2 1\n",
        "2 1\n1 1\n",
        "2 1\n1 3\n",
        "2 1\n1 2 3\n",
    ])
    def test_malformed(self, bad):
        with pytest.raises(MalformedGraphError):
            parse_graph(bad)

    @given(graphs_strategy())
    @settings(max_examples=80, deadline=None)
    def test_roundtrip(self, g):
        assert parse_graph(format_graph(g)) == g

    def test_dot_labels_and_bold(self):
        prod = cartesian_product(path_graph(2), path_graph(2))
        dot = to_dot(prod, layers=2, bold=[(1, 2)])
        assert '"1_1" -- "1_2" [style=bold];' in dot
        assert '"2_1" -- "2_2";' in dot
        plain = to_dot(path_graph(2))
        assert '"1" -- "2";' in plain


class TestIsomorphic:
    def test_relabeled_tree(self):
        a = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (3, 5)])
        b = Graph.from_edges(5, [(5, 4), (4, 1), (1, 2), (1, 3)])
        assert isomorphic(a, b)

    def test_distinguishes_path_star(self):
        assert not isomorphic(path_graph(4), star_graph(3))
