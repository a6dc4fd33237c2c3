import random

import pytest

from boxham.cycles import build_cycle, verify_cycle
from boxham.errors import BudgetExceededError, NoFactorError, PreconditionFailedError
from boxham.factors import find_perfect_matching
from boxham.graphs import (
    Graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    degree_stats,
    isomorphic,
    path_graph,
    star_graph,
)
from boxham.oracle import (
    enumerate_trees,
    find_hamiltonian_cycle,
    find_spanning_path,
    fixtures,
    format_scan_report,
    scan_balanced_odd,
    scan_below_layer_bound,
    tree_canonical_form,
)
from boxham.toughness import is_one_tough
from helpers import all_pairs, random_connected_graph


class TestHamOracle:
    def test_square(self):
        res = find_hamiltonian_cycle(cycle_graph(4))
        assert res.found and res.cycle.seq == (1, 2, 3, 4)

    def test_degenerate_edge(self):
        res = find_hamiltonian_cycle(path_graph(2))
        assert res.found and res.cycle.seq == (1, 2)

    def test_single_vertex(self):
        assert find_hamiltonian_cycle(Graph(1)).status == "none"

    def test_unbalanced_bipartite_shortcut(self):
        res = find_hamiltonian_cycle(star_graph(3))
        assert res.status == "none" and res.nodes == 0

    def test_found_cycles_verify(self):
        rng = random.Random(3)
        found = 0
        for _ in range(100):
            g = random_connected_graph(rng, 3, 10)
            res = find_hamiltonian_cycle(g)
            if res.found:
                found += 1
                assert verify_cycle(g, res.cycle)
        assert found > 10

    def test_budget(self):
        prod = cartesian_product(path_graph(4), fixtures().t1)
        res = find_hamiltonian_cycle(prod, max_nodes=3)
        assert res.status == "unknown"


class TestTraceableOracle:
    def test_path_itself(self):
        res = find_spanning_path(path_graph(5))
        assert res.path == (1, 2, 3, 4, 5)

    def test_star_none(self):
        assert find_spanning_path(star_graph(3)).status == "none"

    def test_fig1_traceable(self):
        assert find_spanning_path(fixtures().fig1).status == "found"

    def test_found_paths_are_spanning(self):
        rng = random.Random(17)
        for _ in range(60):
            g = random_connected_graph(rng, 2, 9)
            res = find_spanning_path(g)
            if res.status == "found":
                p = res.path
                assert sorted(p) == list(g.vertices())
                assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


class TestFixtures:
    def test_t1_shape(self):
        t1 = fixtures().t1
        assert (t1.order, t1.size) == (8, 7)
        assert degree_stats(t1).maximum == 3

    def test_fig4_shape(self):
        fig4 = fixtures().fig4
        assert (fig4.order, fig4.size) == (6, 5)
        assert fig4.degree(2) == 3

    def test_fig1_shape(self):
        fig1 = fixtures().fig1
        assert (fig1.order, fig1.size) == (7, 9)


class TestTreeEnumeration:
    def test_counts(self):
        by_order = {}
        for t in enumerate_trees(8):
            by_order[t.order] = by_order.get(t.order, 0) + 1
        assert by_order == {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}

    def test_cap(self):
        with pytest.raises(BudgetExceededError):
            list(enumerate_trees(13))

    def test_deterministic(self):
        a = [t.edges for t in enumerate_trees(7)]
        b = [t.edges for t in enumerate_trees(7)]
        assert a == b

    def test_pairwise_non_isomorphic_up_to_8(self):
        for order in range(2, 9):
            trees = [t for t in enumerate_trees(8) if t.order == order]
            for a, b in all_pairs(trees):
                assert not isomorphic(a, b)

    def test_canonical_form_invariant_under_relabel(self):
        rng = random.Random(4)
        for t in enumerate_trees(7):
            perm = list(t.vertices())
            rng.shuffle(perm)
            relabel = {v: perm[i] for i, v in enumerate(t.vertices())}
            shuffled = Graph.from_edges(t.order, [(relabel[u], relabel[v])
                                                  for u, v in t.edges])
            assert tree_canonical_form(t) == tree_canonical_form(shuffled)


class TestOracleBuilderAgreement:
    def test_builder_success_implies_oracle_success(self):
        rng = random.Random(51)
        checked = 0
        for _ in range(40):
            g = random_connected_graph(rng, 2, 6)
            for n in (2, 3, 4):
                if n * g.order > 24:
                    continue
                try:
                    res = build_cycle(n, g)
                except Exception:
                    continue
                prod = cartesian_product(path_graph(n), g)
                assert verify_cycle(prod, res.cycle)
                oracle_res = find_hamiltonian_cycle(prod)
                assert oracle_res.found
                checked += 1
        assert checked > 20

    def test_matching_boundary(self):
        # below the layer requirement the product really is non-Hamiltonian
        for t in enumerate_trees(8):
            m = find_perfect_matching(t)
            if m is None:
                continue
            dmax = degree_stats(t).maximum
            for n in range(1, dmax):
                if n * t.order > 24:
                    continue
                prod = cartesian_product(path_graph(n), t)
                assert find_hamiltonian_cycle(prod).status == "none"

    def test_oracle_success_implies_one_tough(self):
        rng = random.Random(99)
        hits = 0
        for _ in range(60):
            g = random_connected_graph(rng, 3, 9)
            if find_hamiltonian_cycle(g).found:
                hits += 1
                assert is_one_tough(g).verdict == "yes"
        assert hits > 5

    @pytest.mark.slow
    def test_builder_vs_oracle_soak(self):
        # constructed cycles and exhaustive search agree on every tree
        # product up to 32 vertices along both routes
        for t in enumerate_trees(8):
            dmax = degree_stats(t).maximum
            m = find_perfect_matching(t)
            from boxham.factors import find_p23_factor
            f = find_p23_factor(t)
            candidates = []
            if m is not None:
                candidates.extend(n for n in range(dmax, dmax + 3))
            if f is not None:
                candidates.append(4 * dmax - 2)
            for n in candidates:
                if n * t.order > 32 or n < 1:
                    continue
                res = build_cycle(n, t)
                prod = cartesian_product(path_graph(n), t)
                assert verify_cycle(prod, res.cycle)
                if n * t.order >= 3:
                    assert find_hamiltonian_cycle(prod).found, (t.edges, n)


class TestScans:
    def test_scan1_rejects_small_k(self):
        with pytest.raises(PreconditionFailedError):
            scan_below_layer_bound(2, 5)

    def test_scan1_k3_includes_t1(self):
        report = scan_below_layer_bound(3, 8, max_nodes_per_instance=200000)
        t1key = None
        for e in report.entries:
            if e.base.order == 8 and isomorphic(e.base, fixtures().t1):
                t1key = e.key
                assert e.layers == 8
        assert t1key is not None
        assert report.params["layers"] == 8

    def test_scan1_small_complete(self):
        report = scan_below_layer_bound(3, 5)
        assert report.status == "complete"
        assert all(e.layers == 8 for e in report.entries)
        # every base really has max degree 3 and a factor
        for e in report.entries:
            assert degree_stats(e.base).maximum == 3

    def test_scan2_fig4_entry(self):
        report = scan_balanced_odd(6, 5)
        fig4 = fixtures().fig4
        hit = [e for e in report.entries
               if e.layers == 5 and e.base.order == 6 and isomorphic(e.base, fig4)]
        assert len(hit) == 1
        assert hit[0].verdict == "hamiltonian"
        assert not hit[0].in_range  # 5 < 4*3 - 2

    def test_scan2_p2_in_range(self):
        report = scan_balanced_odd(2, 5)
        entries = [(e.layers, e.verdict, e.in_range) for e in report.entries]
        assert (3, "hamiltonian", True) in entries
        assert (5, "hamiltonian", True) in entries

    def test_scan_truncation_and_resume(self):
        full = scan_balanced_odd(4, 5)
        part1 = scan_balanced_odd(4, 5, budget_seconds=0)
        assert part1.status == "truncated"
        resumed = scan_balanced_odd(4, 5, start_index=part1.last_index + 1)
        keys = [(e.key, e.layers) for e in part1.entries] + \
               [(e.key, e.layers) for e in resumed.entries]
        assert keys == [(e.key, e.layers) for e in full.entries]

    def test_workers_agree(self):
        a = scan_balanced_odd(5, 5, workers=1)
        b = scan_balanced_odd(5, 5, workers=2)
        assert [(e.key, e.layers, e.verdict) for e in a.entries] == \
               [(e.key, e.layers, e.verdict) for e in b.entries]

    def test_report_format_round(self):
        report = scan_balanced_odd(4, 3)
        text = format_scan_report(report)
        assert text.startswith("scan balanced_odd")
        assert f"examined {report.instances_examined}" in text
        assert "status complete" in text
