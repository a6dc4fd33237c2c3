#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Both backends run the same searches with identical node counts, so the
table is a clean apples-to-apples timing comparison.

    python benchmarks/bench_kernels.py            # quick set
    python benchmarks/bench_kernels.py --full     # adds the 32-vertex
                                                  # 1-toughness flagship
"""

import argparse
import time

from boxham import _pykernels, kernels
from boxham.graphs import Graph, cartesian_product, path_graph

T1 = Graph.from_edges(8, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (3, 7), (4, 8)])
FIG4 = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (2, 5), (3, 6)])


def instances(full):
    yield ("ham_cycle", "P5 x caterpillar6 (found)",
           cartesian_product(path_graph(5), FIG4), "ham_cycle", ())
    yield ("ham_cycle", "P4 x caterpillar8 (none)",
           cartesian_product(path_graph(4), T1), "ham_cycle", ())
    yield ("ham_cycle", "P6 x caterpillar8 (found)",
           cartesian_product(path_graph(6), T1), "ham_cycle", ())
    yield ("ham_path", "P4 x caterpillar8",
           cartesian_product(path_graph(4), T1), "ham_path", ())
    yield ("scattering", "P3 x caterpillar8 (24 vertices)",
           cartesian_product(path_graph(3), T1), "scattering_max", (0, 0))
    yield ("toughness_scan", "P2 x caterpillar8 (2^16 subsets)",
           cartesian_product(path_graph(2), T1), "toughness_scan", ())
    yield ("toughness_scan", "P3 x caterpillar6 (2^18 subsets)",
           cartesian_product(path_graph(3), FIG4), "toughness_scan", ())
    if full:
        yield ("scattering", "P4 x caterpillar8 flagship (32 vertices)",
               cartesian_product(path_graph(4), T1), "scattering_max", (0, 0))


def run_one(impl, func, g, extra):
    adj = list(g.adjacency_masks)
    start = time.perf_counter()
    if func == "toughness_scan":
        result = getattr(impl, func)(g.order, adj)
        nodes = 1 << g.order
    else:
        out = getattr(impl, func)(g.order, adj, *extra, None, None)
        result, nodes = out[:-1], out[-1]
    return time.perf_counter() - start, nodes, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true",
                        help="include the long pure-Python flagship run")
    args = parser.parse_args()

    if kernels.BACKEND != "compiled":
        print("warning: compiled extension not importable; comparing pure to itself")
    fast = kernels._fast if kernels.BACKEND == "compiled" else _pykernels

    header = f"{'kernel':<15} {'instance':<38} {'pure':>9} {'compiled':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for kind, label, g, func, extra in instances(args.full):
        t_pure, nodes, r_pure = run_one(_pykernels, func, g, extra)
        t_fast, nodes2, r_fast = run_one(fast, func, g, extra)
        assert r_pure == r_fast, f"backend mismatch on {label}"
        assert nodes == nodes2
        speedup = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{kind:<15} {label:<38} {t_pure:>8.3f}s {t_fast:>8.3f}s {speedup:>7.1f}x")
    print("\nresults identical across backends (including node counts)")


if __name__ == "__main__":
    main()
