"""Tree- and path-decompositions: validation, width/adhesion, and the
constructive necklace decompositions."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, NecklaceSpec, Society, make_graph, necklace_graph


class DecompositionError(ValueError):
    """Structurally invalid decomposition input."""


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by node id ``0..len(bags)-1`` plus the edges of the tree."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, bags: Iterable[Iterable[int]], tree_edges: Iterable[Sequence[int]]):
        bags = tuple(frozenset(b) for b in bags)
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in tree_edges))
        return cls(bags, edges)

    @classmethod
    def path(cls, bags: Iterable[Iterable[int]]) -> "TreeDecomposition":
        bags = list(bags)
        return cls.build(bags, [(i, i + 1) for i in range(len(bags) - 1)])

    @property
    def tree(self) -> Graph:
        return make_graph(len(self.bags), self.tree_edges)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def adhesion(self) -> int:
        return max((len(self.bags[a] & self.bags[b]) for a, b in self.tree_edges), default=0)

    def to_dict(self) -> dict:
        return {
            "nodes": list(range(len(self.bags))),
            "tree_edges": [list(e) for e in self.tree_edges],
            "bags": {str(i): sorted(b) for i, b in enumerate(self.bags)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "TreeDecomposition":
        nodes = [int(t) for t in data["nodes"]]
        if sorted(nodes) != list(range(len(nodes))):
            raise DecompositionError("node ids must be 0..m-1")
        bags = data["bags"]
        if sorted(int(t) for t in bags) != list(range(len(nodes))):
            raise DecompositionError("bag node ids do not match tree nodes")
        return cls.build([bags[str(t)] for t in range(len(nodes))], data["tree_edges"])


def width(td: TreeDecomposition) -> int:
    return td.width


def adhesion(td: TreeDecomposition) -> int:
    return td.adhesion


def validate_td(g: Graph, td: TreeDecomposition) -> list[str]:
    """All violations of the decomposition axioms; an empty list means valid."""
    problems = []
    m = len(td.bags)
    if m == 0:
        return ["decomposition has no nodes"]
    for a, b in td.tree_edges:
        if not (0 <= a < m and 0 <= b < m) or a == b:
            problems.append(f"tree edge ({a}, {b}) is not between distinct nodes")
    if problems:
        return problems
    tree_adj: list[list[int]] = [[] for _ in range(m)]
    for a, b in td.tree_edges:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    if len(set(td.tree_edges)) != m - 1 or len(_reach(tree_adj, 0, set(range(m)))) != m:
        problems.append("tree edges do not form a tree")
        return problems
    for t, bag in enumerate(td.bags):
        bad = [v for v in bag if not 0 <= v < g.n]
        if bad:
            problems.append(f"bag {t} holds non-vertices {sorted(bad)}")
    where: list[set[int]] = [set() for _ in range(g.n)]
    for t, bag in enumerate(td.bags):
        for v in bag:
            if 0 <= v < g.n:
                where[v].add(t)
    for v in range(g.n):
        if not where[v]:
            problems.append(f"vertex {v} is in no bag")
    for u, v in g.edges:
        if not (where[u] & where[v]):
            problems.append(f"edge ({u}, {v}) is in no bag")
    for v in range(g.n):
        if where[v]:
            start = min(where[v])
            if _reach(tree_adj, start, where[v]) != where[v]:
                problems.append(f"bags containing vertex {v} are not connected")
    return problems


def _reach(tree_adj, start: int, allowed: set[int]) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for s in tree_adj[t]:
            if s in allowed and s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


# --- necklaces -------------------------------------------------------------


class _Builder:
    def __init__(self):
        self.bags: list[frozenset[int]] = []
        self.edges: list[tuple[int, int]] = []

    def node(self, bag: Iterable[int]) -> int:
        self.bags.append(frozenset(bag))
        return len(self.bags) - 1

    def link(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def find(self, nodes: Iterable[int], *vertices: int) -> int:
        for t in nodes:
            if all(v in self.bags[t] for v in vertices):
                return t
        raise AssertionError(f"no bag holds {vertices}")


def _cycle_fan(b: _Builder, chain: list[int]) -> list[int]:
    """Width-2 path decomposition of the cycle through ``chain``: bags
    {c0, c_i, c_{i+1}}."""
    if len(chain) <= 3:
        return [b.node(chain)]
    nodes = []
    for i in range(1, len(chain) - 1):
        nodes.append(b.node((chain[0], chain[i], chain[i + 1])))
        if len(nodes) > 1:
            b.link(nodes[-2], nodes[-1])
    return nodes


def _necklace_nodes(b: _Builder, chain: list[int], cliques: list[frozenset[int]]) -> list[int]:
    """Decompose the necklace on cyclic ``chain`` with the given cliques; return
    the node ids created."""
    if not cliques:
        return _cycle_fan(b, chain)
    pos = {v: i for i, v in enumerate(chain)}
    # the clique meeting the lowest chain position, then lexicographic order
    first = min(cliques, key=lambda m: (min(pos[v] for v in m), sorted(pos[v] for v in m)))
    rest = [m for m in cliques if m is not first]
    cut = sorted(pos[v] for v in first)
    # rotate so the chosen clique starts the chain
    chain = chain[cut[0]:] + chain[:cut[0]]
    cut = [i - cut[0] for i in cut]
    pos = {v: i for i, v in enumerate(chain)}
    m = len(chain)
    centre = b.node(first)
    nodes = [centre]
    bounds = cut + [m]
    for j in range(len(cut)):
        lo, hi = bounds[j], bounds[j + 1]
        if hi - lo < 2:
            continue  # adjacent on the chain: that edge sits in the centre bag
        seg = chain[lo:hi] + [chain[hi % m]]
        inside = set(seg)
        sub = [c for c in rest if c <= inside]
        sub_nodes = _necklace_nodes(b, seg, sub)
        b.link(centre, b.find(sub_nodes, seg[0], seg[-1]))
        nodes += sub_nodes
    return nodes


def necklace_td(spec: NecklaceSpec) -> TreeDecomposition:
    """Tree-decomposition of ``necklace_graph(spec)`` of width at most
    ``max(q - 1, 2)``.

    Recursive: the chosen clique becomes a central bag, the chain is cut at its
    vertices, and each piece (closed by the clique edge between its ends) is a
    smaller necklace decomposed on its own and hung off the central bag. A
    clique-free piece gets the standard width-2 fan of its cycle.
    """
    spec.validate()
    b = _Builder()
    chain = list(range(spec.n))
    cliques = list(spec.cliques)
    if spec.n <= 3:
        b.node(chain)
    else:
        _necklace_nodes(b, chain, cliques)
    return TreeDecomposition.build(b.bags, b.edges)


# --- vortical decompositions and the combination ---------------------------


@dataclass(frozen=True)
class VorticalDecomposition:
    """Path-decomposition whose i-th bag is pegged to the i-th boundary vertex."""

    bags: tuple[frozenset[int], ...]

    @classmethod
    def build(cls, bags: Iterable[Iterable[int]]) -> "VorticalDecomposition":
        return cls(tuple(frozenset(x) for x in bags))

    def as_tree(self) -> TreeDecomposition:
        return TreeDecomposition.path(self.bags)

    @property
    def width(self) -> int:
        return self.as_tree().width

    @property
    def adhesion(self) -> int:
        return self.as_tree().adhesion


def validate_vortical(society: Society, vd: VorticalDecomposition, rho: int) -> list[str]:
    problems = []
    omega = society.omega
    if len(vd.bags) != len(omega):
        problems.append(f"{len(vd.bags)} bags for {len(omega)} boundary vertices")
    if not vd.bags:
        return problems + ["decomposition has no bags"]
    problems += validate_td(society.graph, vd.as_tree())
    for i, (v, bag) in enumerate(zip(omega, vd.bags)):
        if v not in bag:
            problems.append(f"bag {i} misses boundary vertex {v}")
    adh = vd.adhesion
    if adh > rho:
        problems.append(f"adhesion {adh} exceeds {rho}")
    return problems


def combine_necklace_vortex(spec: NecklaceSpec, td: TreeDecomposition, society: Society,
                            vd: VorticalDecomposition) -> tuple[Graph, TreeDecomposition]:
    """Decomposition of the necklace glued onto a society.

    Chain vertex ``i`` of the necklace is identified with ``society.omega[i]``;
    the merged graph lives on the society's vertex ids. Every necklace bag is
    enlarged by the vortical bags of the boundary vertices it holds, so widths
    obey ``q * (w + 1) - 1``.
    """
    if spec.q < 3:
        raise DecompositionError("the combination requires q >= 3")
    if spec.n != len(society.omega):
        raise DecompositionError(
            f"chain length {spec.n} differs from boundary length {len(society.omega)}")
    neck = necklace_graph(spec)
    issues = validate_td(neck, td)
    if issues:
        raise DecompositionError("necklace decomposition invalid: " + "; ".join(issues))
    issues = validate_vortical(society, vd, rho=len(society.graph.vertices()))
    if issues:
        raise DecompositionError("vortical decomposition invalid: " + "; ".join(issues))
    omega = society.omega
    merged = make_graph(
        society.graph.n,
        list(society.graph.edges) + [(omega[u], omega[v]) for u, v in neck.edges])
    bags = []
    for bag in td.bags:
        new = {omega[u] for u in bag}
        for u in bag:
            new |= vd.bags[u]
        bags.append(new)
    return merged, TreeDecomposition.build(bags, td.tree_edges)


def random_vortical_society(n: int, w: int, extra: int, rng, edge_p: float = 0.5):
    """Random society with boundary ``0..n-1`` and a vortical decomposition of
    width at most ``w``; ``extra`` interior vertices are spread along the path.

    Every edge is drawn inside a single bag, so the decomposition is valid by
    construction.
    """
    if n < 1:
        raise GraphError("boundary must be nonempty")
    interior = list(range(n, n + extra))
    bags = [{i} for i in range(n)]
    for x in interior:
        start = rng.randrange(n)
        span = rng.randint(1, max(1, min(3, n - start)))
        fits = [i for i in range(start, start + span) if len(bags[i]) <= w]
        if len(fits) != span:
            continue
        for i in fits:
            bags[i].add(x)
    used = sorted(set().union(*bags))
    relabel = {v: i for i, v in enumerate(used)}
    bags = [{relabel[v] for v in bag} for bag in bags]
    edges = []
    for bag in bags:
        vs = sorted(bag)
        for a in range(len(vs)):
            for c in range(a + 1, len(vs)):
                if rng.random() < edge_p:
                    edges.append((vs[a], vs[c]))
    society = Society(make_graph(len(used), edges), tuple(range(n)))
    return society, VorticalDecomposition.build(bags)
