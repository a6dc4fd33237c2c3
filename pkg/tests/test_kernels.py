"""Backend parity: the compiled extension must match the pure kernels
bit for bit, node counts included."""

import random

import pytest

from boxham import _pykernels, kernels
from boxham.graphs import Graph, cartesian_product, path_graph

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled",
                              reason="compiled extension not built")


def random_masks(rng, max_order=9):
    n = rng.randint(1, max_order)
    edges = [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)
             if rng.random() < 0.45]
    return n, list(Graph.from_edges(n, edges).adjacency_masks)


@compiled
class TestParity:
    def test_ham_cycle(self):
        rng = random.Random(101)
        for _ in range(250):
            n, adj = random_masks(rng)
            assert (kernels._fast.ham_cycle(n, adj, None, None)
                    == _pykernels.ham_cycle(n, adj, None, None))

    def test_ham_path(self):
        rng = random.Random(102)
        for _ in range(250):
            n, adj = random_masks(rng)
            assert (kernels._fast.ham_path(n, adj, None, None)
                    == _pykernels.ham_path(n, adj, None, None))

    def test_scattering(self):
        rng = random.Random(103)
        for _ in range(250):
            n, adj = random_masks(rng)
            for prune, stop in ((None, None), (0, 0)):
                assert (kernels._fast.scattering_max(n, adj, prune, stop, None, None)
                        == _pykernels.scattering_max(n, adj, prune, stop, None, None))

    def test_toughness(self):
        rng = random.Random(104)
        for _ in range(200):
            n, adj = random_masks(rng)
            assert (kernels._fast.toughness_scan(n, adj)
                    == _pykernels.toughness_scan(n, adj))

    def test_budget_counts(self):
        rng = random.Random(105)
        for _ in range(50):
            n, adj = random_masks(rng, 8)
            for cap in (1, 5, 50):
                assert (kernels._fast.ham_cycle(n, adj, cap, None)
                        == _pykernels.ham_cycle(n, adj, cap, None))
                assert (kernels._fast.scattering_max(n, adj, None, None, cap, None)
                        == _pykernels.scattering_max(n, adj, None, None, cap, None))

    def test_mask_boundary_64_vertices(self):
        # exactly 64 vertices still rides the compiled path; the full-mask
        # computation must not shift a 64-bit word by 64
        from boxham.oracle import fixtures
        prod = cartesian_product(path_graph(8), fixtures().t1)
        assert prod.order == 64
        adj = list(prod.adjacency_masks)
        fast = kernels._fast.ham_cycle(64, adj, 2_000_000, None)
        pure = _pykernels.ham_cycle(64, adj, 2_000_000, None)
        assert fast == pure and fast[0] == "found"
        assert (kernels._fast.scattering_max(64, adj, 0, 0, 100_000, None)
                == _pykernels.scattering_max(64, adj, 0, 0, 100_000, None))

    def test_product_instances(self):
        # mid-size real instances, not just random soup
        from boxham.oracle import fixtures
        cases = [
            cartesian_product(path_graph(2), fixtures().t1),    # 16 vertices
            cartesian_product(path_graph(2), fixtures().fig4),  # 12 vertices
            cartesian_product(path_graph(3), path_graph(5)),    # 15-vertex grid
        ]
        for g in cases:
            n, adj = g.order, list(g.adjacency_masks)
            assert (kernels._fast.ham_cycle(n, adj, None, None)
                    == _pykernels.ham_cycle(n, adj, None, None))
            assert (kernels._fast.scattering_max(n, adj, 0, 0, None, None)
                    == _pykernels.scattering_max(n, adj, 0, 0, None, None))
            assert (kernels._fast.toughness_scan(n, adj)
                    == _pykernels.toughness_scan(n, adj))


class TestWrappers:
    def test_vertex_translation(self):
        g = path_graph(4)
        status, order, _ = kernels.ham_path(g)
        assert status == "found" and order == (1, 2, 3, 4)

    def test_large_instances_fall_back_to_pure(self):
        # 80 vertices exceeds the 64-bit compiled window
        big = cartesian_product(path_graph(10), path_graph(8))
        status, order, _ = kernels.ham_cycle(big)
        assert status == "found"
        assert sorted(order) == list(range(1, 81))

    def test_scattering_cut_translation(self):
        from boxham.graphs import star_graph
        status, val, cut, _ = kernels.scattering_max(star_graph(3))
        assert status == "complete" and val == 2 and cut == {1}
