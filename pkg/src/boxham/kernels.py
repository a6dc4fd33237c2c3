"""Kernel backend selection and Graph-level wrappers.

The hot search loops (Hamiltonian cycle and spanning-path backtracking,
the scattering branch-and-bound behind the 1-toughness decision, and the
exact toughness subset scan) exist twice: compiled Cython in
``boxham._ckernels`` and pure Python in ``boxham._pykernels``.  The
compiled core is used when it imported and the instance fits in 64-bit
masks; everything else runs on the pure fallback.  Set BOXHAM_PURE_KERNELS
to force the fallback.
"""

from __future__ import annotations

import os
import time

from . import _pykernels
from .graphs import Graph

if os.environ.get("BOXHAM_PURE_KERNELS"):
    _fast = None
else:
    try:
        from . import _ckernels as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

_COMPILED_MAX_ORDER = 64


def _impl_for(order: int):
    if _fast is not None and order <= _COMPILED_MAX_ORDER:
        return _fast
    return _pykernels


def _deadline(budget_seconds):
    if budget_seconds is None:
        return None
    return time.monotonic() + budget_seconds


def backend_name() -> str:
    return BACKEND


def ham_cycle(g: Graph, *, max_nodes=None, budget_seconds=None):
    """(status, vertex tuple or None, nodes) on 1-indexed vertices."""
    impl = _impl_for(g.order)
    status, order, nodes = impl.ham_cycle(
        g.order, list(g.adjacency_masks),
        max_nodes, _deadline(budget_seconds))
    if order is not None:
        order = tuple(v + 1 for v in order)
    return status, order, nodes


def ham_path(g: Graph, *, max_nodes=None, budget_seconds=None):
    impl = _impl_for(g.order)
    status, order, nodes = impl.ham_path(
        g.order, list(g.adjacency_masks),
        max_nodes, _deadline(budget_seconds))
    if order is not None:
        order = tuple(v + 1 for v in order)
    return status, order, nodes


def scattering_max(g: Graph, *, prune_at=None, stop_above=None,
                   max_nodes=None, budget_seconds=None):
    """(status, best value, best cut frozenset or None, nodes)."""
    impl = _impl_for(g.order)
    status, val, mask, nodes = impl.scattering_max(
        g.order, list(g.adjacency_masks),
        prune_at, stop_above, max_nodes, _deadline(budget_seconds))
    cut = None if mask is None else _mask_to_set(mask)
    return status, val, cut, nodes


def toughness_scan(g: Graph):
    """(size, component count, cut frozenset) of the toughness minimizer, or None."""
    impl = _impl_for(g.order)
    best = impl.toughness_scan(g.order, list(g.adjacency_masks))
    if best is None:
        return None
    size, comps, mask = best
    return size, comps, _mask_to_set(mask)


def count_components_after(g: Graph, removed: frozenset[int] | set[int]) -> int:
    alive = _set_to_alive_mask(g.order, removed)
    return _pykernels.count_components(list(g.adjacency_masks), alive)


def count_isolated_after(g: Graph, removed: frozenset[int] | set[int]) -> int:
    alive = _set_to_alive_mask(g.order, removed)
    return _pykernels.count_isolated(list(g.adjacency_masks), alive)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length())
    return frozenset(out)


def _set_to_alive_mask(order: int, removed) -> int:
    mask = (1 << order) - 1
    for v in removed:
        mask &= ~(1 << (v - 1))
    return mask
