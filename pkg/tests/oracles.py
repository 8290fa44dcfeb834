"""Slow, independent reference implementations used only by the tests."""
import itertools

from clustcolor.graph import Graph, components


def brute_treewidth(g: Graph) -> int:
    """Minimum over all elimination orderings, explored depth-first with the
    running width as a cut-off. No shared code with the library DP."""
    if g.n == 0:
        return -1
    best = [g.n - 1]

    def go(nbrs: dict, current: int):
        if current >= best[0]:
            return
        if len(nbrs) <= current + 1:
            best[0] = current
            return
        for v in sorted(nbrs):
            deg = len(nbrs[v])
            if max(current, deg) >= best[0]:
                continue
            rest = {u: set(ns) for u, ns in nbrs.items() if u != v}
            for a in nbrs[v]:
                rest[a] |= nbrs[v] - {a}
                rest[a].discard(v)
            go(rest, max(current, deg))

    go({v: set(g.adj[v]) for v in range(g.n)}, 0)
    return best[0]


def all_colorings(n: int, k: int):
    return itertools.product(range(1, k + 1), repeat=n)


def max_mono(g: Graph, colors) -> int:
    best = 0
    for c in set(colors):
        for comp in components(g, within=[v for v in range(g.n) if colors[v] == c]):
            best = max(best, len(comp))
    return best


def brute_min_max(g: Graph, k: int, pre=None) -> int:
    pre = pre or {}
    return min(max_mono(g, col) for col in all_colorings(g.n, k)
               if all(col[v] == c for v, c in pre.items()))
