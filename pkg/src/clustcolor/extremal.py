"""Lower-bound constructions and their exhaustive verifiers: the HEX grid, the
bounded-treewidth diameter gadget, and line graphs of high-girth regular graphs."""
from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import DEFAULT_BUDGET, ForallResult, Predicate, forall_colorings_check
from .graph import (Graph, GraphError, girth, is_regular, line_graph, make_graph,
                    path_graph, random_regular_with_girth, triangular_grid)

DEFAULT_SIZE_CAP = 5000


class SizeCapExceeded(ValueError):
    def __init__(self, predicted: int, cap: int):
        super().__init__(f"construction needs {predicted} vertices, cap is {cap}")
        self.predicted = predicted
        self.cap = cap


@dataclass(frozen=True)
class GadgetParams:
    level: int
    d: int
    base_path_length: int | None = None  # default d + 2
    size_cap: int = DEFAULT_SIZE_CAP

    @property
    def base(self) -> int:
        return self.d + 2 if self.base_path_length is None else self.base_path_length


def tree_nodes(arity: int, depth: int) -> int:
    """Nodes of the complete ``arity``-ary tree with all leaves at ``depth``."""
    return sum(arity ** i for i in range(depth + 1))


def gadget_size(p: GadgetParams) -> int:
    n = p.base
    for _ in range(p.level - 1):
        n = 1 + tree_nodes(n, p.d) * n
    return n


def build_gadget(p: GadgetParams) -> Graph:
    """Level-``i`` gadget: every i-colouring has a monochromatic component of
    diameter greater than ``d``.

    Level 1 is a path on ``base`` vertices. Level ``i`` takes the complete
    ``n``-ary tree of depth ``d`` (``n`` = size of level ``i-1``, nodes in BFS
    order, children of ``t`` are ``t*n+1 .. t*n+n``), places a copy of level
    ``i-1`` on every node (node ``t`` owns vertices ``t*n .. t*n+n-1``), joins
    the ``j``-th vertex of a copy to all of the copy at its ``j``-th child, and
    adds an apex (the last vertex) adjacent to the root copy.
    """
    if p.level < 1 or p.d < 1 or p.base < 1:
        raise GraphError("level, d and base_path_length must be positive")
    predicted = gadget_size(p)
    if predicted > p.size_cap:
        raise SizeCapExceeded(predicted, p.size_cap)
    g = path_graph(p.base)
    for _ in range(p.level - 1):
        g = _lift(g, p.d)
    assert g.n == predicted
    return g


def _lift(h: Graph, depth: int) -> Graph:
    n = h.n
    nodes = tree_nodes(n, depth)
    internal = tree_nodes(n, depth - 1)
    edges = []
    for t in range(nodes):
        off = t * n
        edges += [(off + a, off + b) for a, b in h.edges]
    for t in range(internal):
        for j in range(n):
            child = t * n + j + 1
            u = t * n + j
            edges += [(u, child * n + x) for x in range(n)]
    apex = nodes * n
    edges += [(apex, x) for x in range(n)]
    return make_graph(apex + 1, edges)


def verify_gadget(g: Graph, level: int, d: int, budget: int = DEFAULT_BUDGET,
                  threads: int = 1, backend: str | None = None) -> ForallResult:
    return forall_colorings_check(g, level, Predicate("diameter", d), budget, threads, backend)


def hex_check(k: int, budget: int = DEFAULT_BUDGET, threads: int = 1,
              backend: str | None = None) -> ForallResult:
    """Every 2-colouring of the k x k triangular grid has a component with at least k vertices."""
    return forall_colorings_check(triangular_grid(k), 2, Predicate("size", k), budget,
                                  threads, backend)


@dataclass(frozen=True)
class LineFamily:
    graph: Graph
    base: Graph
    provenance: dict = field(default_factory=dict)


def build_line_family(k: int, N: int, seed: int = 0, base: Graph | None = None,
                      max_attempts: int = 2000) -> LineFamily:
    """Line graph of a 2k-regular graph of girth at least N; (4k-2)-regular."""
    if k < 1 or N < 3:
        raise GraphError("need k >= 1 and N >= 3")
    if base is None:
        base = random_regular_with_girth(2 * k, N, seed=seed, max_attempts=max_attempts)
    base_girth = girth(base)
    if not is_regular(base, 2 * k) or base_girth < N:
        raise GraphError(f"base graph must be {2 * k}-regular with girth >= {N}")
    lg = line_graph(base)
    prov = {"k": k, "N": N, "seed": seed, "base_n": base.n, "base_degree": 2 * k,
            "base_girth": base_girth, "degree": 4 * k - 2}
    return LineFamily(lg, base, prov)


def verify_line_family(g: Graph, k: int, N: int, budget: int = DEFAULT_BUDGET,
                       threads: int = 1, backend: str | None = None) -> ForallResult:
    return forall_colorings_check(g, k, Predicate("size", N), budget, threads, backend)
