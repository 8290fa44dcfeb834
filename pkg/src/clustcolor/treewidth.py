"""Exact treewidth for small graphs and greedy upper bounds."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .decomp import TreeDecomposition
from .graph import Graph

DEFAULT_LIMIT = 20


class SizeLimitError(ValueError):
    """Instance too large for an exact routine."""


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    order: tuple[int, ...]
    td: TreeDecomposition


def elimination_td(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Decomposition induced by eliminating vertices in ``order``.

    Bag ``i`` is ``order[i]`` plus its later neighbours in the fill-in graph;
    its parent is the bag of the earliest-eliminated of those neighbours.
    Components are chained to keep a single tree.
    """
    if g.n == 0:
        return TreeDecomposition.build([()], [])
    position = {v: i for i, v in enumerate(order)}
    nbrs = [set(a) for a in g.adj]
    bags, parent = [], []
    for v in order:
        later = {u for u in nbrs[v] if position[u] > position[v]}
        bags.append({v} | later)
        for a in later:
            nbrs[a] |= later - {a}
        parent.append(min((position[u] for u in later), default=None))
    edges = []
    for i, p in enumerate(parent):
        if p is not None:
            edges.append((i, p))
        elif i + 1 < len(order):
            edges.append((i, i + 1))
    return TreeDecomposition.build(bags, edges)


def order_width(g: Graph, order: Sequence[int]) -> int:
    return elimination_td(g, order).width


def min_degree_order(g: Graph) -> list[int]:
    """Greedy min-degree elimination (ties: smallest vertex)."""
    nbrs = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda x: (len(nbrs[x]), x))
        order.append(v)
        for a in nbrs[v]:
            nbrs[a] |= nbrs[v] - {a}
            nbrs[a].discard(v)
        alive.discard(v)
    return order


def min_fill_order(g: Graph) -> list[int]:
    """Greedy min-fill elimination (ties: fewer neighbours, then smallest vertex)."""
    nbrs = [set(a) for a in g.adj]
    alive = set(range(g.n))
    order = []

    def fill(x):
        ns = list(nbrs[x])
        return sum(1 for i in range(len(ns)) for j in range(i + 1, len(ns))
                   if ns[j] not in nbrs[ns[i]])

    while alive:
        v = min(alive, key=lambda x: (fill(x), len(nbrs[x]), x))
        order.append(v)
        for a in nbrs[v]:
            nbrs[a] |= nbrs[v] - {a}
            nbrs[a].discard(v)
        alive.discard(v)
    return order


def heuristic_td(g: Graph) -> TreeDecomposition:
    """Best of min-degree and min-fill decompositions."""
    tds = [elimination_td(g, min_fill_order(g)), elimination_td(g, min_degree_order(g))]
    return min(tds, key=lambda td: td.width)


def exact_treewidth(g: Graph, limit: int = DEFAULT_LIMIT, backend: str | None = None) -> TreewidthResult:
    """Exact treewidth by subset dynamic programming over elimination orderings.

    A greedy ordering supplies the starting upper bound; the DP only keeps
    subsets that can beat it. Raises :class:`SizeLimitError` above ``limit``
    vertices.
    """
    if g.n > limit:
        raise SizeLimitError(f"{g.n} vertices exceeds the exact treewidth limit {limit}")
    if g.n == 0:
        return TreewidthResult(-1, (), elimination_td(g, []))
    greedy = min((min_fill_order(g), min_degree_order(g)), key=lambda o: order_width(g, o))
    ub = order_width(g, greedy)
    value, order = kernels.get(backend, g.n, dp=True).treewidth_dp(g.n, list(g.adj_masks), ub)
    if order is None:
        order = greedy
        value = ub
    td = elimination_td(g, order)
    assert td.width == value, (td.width, value)
    return TreewidthResult(value, tuple(order), td)
