"""Simple undirected graphs, societies, necklaces and graph generators.

Vertices are dense integers ``0..n-1``. Every generator documents how its
natural coordinates map onto those indices.
"""
from __future__ import annotations

import json
import math
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph input (bad endpoint, self-loop, malformed spec)."""


class GenerationError(RuntimeError):
    """A randomized generator ran out of attempts."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled densely; returns it with the old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return make_graph(len(keep), edges), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # serialization

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            n = int(data["n"])
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from None
        if any(len(e) != 2 for e in edges):
            raise GraphError("every edge must be a pair")
        return make_graph(n, edges)

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical simple graph; duplicate edges are collapsed."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    canon = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(canon)))


# --- basic analysis ------------------------------------------------------


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adj), default=0)


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (of the subgraph induced on ``within``), each sorted,
    listed by smallest vertex."""
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def _bfs_dist(g: Graph, source: int, allowed: set[int]) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in allowed and w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def component_diameter(g: Graph, component: Iterable[int]) -> int:
    """Diameter of the subgraph induced on ``component``, which must be connected."""
    comp = set(component)
    if not comp:
        raise GraphError("diameter of an empty vertex set")
    best = 0
    for s in sorted(comp):
        dist = _bfs_dist(g, s, comp)
        if len(dist) != len(comp):
            raise GraphError("vertex set is not connected")
        best = max(best, max(dist.values()))
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_regular(g: Graph, degree: int) -> bool:
    return all(len(a) == degree for a in g.adj)


# --- generators ----------------------------------------------------------


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    # outer 5-cycle 0..4, spokes i -> i+5, inner pentagram on 5..9
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return make_graph(10, outer + spokes + inner)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is ``g.edges[i]`` (edges in canonical sorted order)."""
    if not g.edges:
        raise GraphError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    pairs = []
    for inc in incident:
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.append((inc[a], inc[b]))
    return make_graph(len(g.edges), pairs)


def grid_index(k: int, i: int, j: int) -> int:
    """Index of triangular-grid vertex ``(i, j)``: ``i * k + j``."""
    return i * k + j


def triangular_grid(k: int) -> Graph:
    """k x k grid with one diagonal per cell: (i,j)~(i+1,j), (i,j+1), (i+1,j+1).

    Vertex ``(i, j)`` is index ``i * k + j``.
    """
    if k < 1:
        raise GraphError("grid size must be positive")
    edges = []
    for i in range(k):
        for j in range(k):
            a = grid_index(k, i, j)
            if i + 1 < k:
                edges.append((a, grid_index(k, i + 1, j)))
            if j + 1 < k:
                edges.append((a, grid_index(k, i, j + 1)))
            if i + 1 < k and j + 1 < k:
                edges.append((a, grid_index(k, i + 1, j + 1)))
    return make_graph(k * k, edges)


# --- societies and necklaces ---------------------------------------------


@dataclass(frozen=True)
class Society:
    """A graph with a cyclically ordered boundary ``omega``."""

    graph: Graph
    omega: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.omega)) != len(self.omega):
            raise GraphError("omega vertices must be distinct")
        for v in self.omega:
            if not 0 <= v < self.graph.n:
                raise GraphError(f"omega vertex {v} is not a vertex of the graph")

    def to_dict(self) -> dict:
        return {"graph": self.graph.to_dict(), "omega": list(self.omega)}

    @classmethod
    def from_dict(cls, data: dict) -> "Society":
        return cls(Graph.from_dict(data["graph"]), tuple(int(v) for v in data["omega"]))


@dataclass(frozen=True)
class NecklaceSpec:
    """Chain ``0..n-1`` (closed into a cycle) plus cliques of at most ``q`` vertices.

    Cliques are given by chain indices; ones with fewer than two vertices carry
    no edges and are dropped.
    """

    n: int
    q: int
    cliques: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "cliques",
            tuple(frozenset(int(v) for v in m) for m in self.cliques if len(set(m)) >= 2),
        )

    def validate(self) -> None:
        if self.n < 1:
            raise GraphError("necklace chain must have at least one vertex")
        if self.q < 1:
            raise GraphError("q must be positive")
        for m in self.cliques:
            if len(m) > self.q:
                raise GraphError(f"clique {sorted(m)} has more than q={self.q} vertices")
            if any(not 0 <= v < self.n for v in m):
                raise GraphError(f"clique {sorted(m)} leaves the chain 0..{self.n - 1}")
        for i, a in enumerate(self.cliques):
            for b in self.cliques[i + 1:]:
                if len(a & b) > 1:
                    raise GraphError(
                        f"cliques {sorted(a)} and {sorted(b)} share an edge")
                if _crossing(a, b):
                    raise GraphError(f"cliques {sorted(a)} and {sorted(b)} cross")

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q, "cliques": [sorted(m) for m in self.cliques]}

    @classmethod
    def from_dict(cls, data: dict) -> "NecklaceSpec":
        return cls(int(data["n"]), int(data["q"]),
                   tuple(frozenset(m) for m in data.get("cliques", [])))


def _crossing(a: frozenset[int], b: frozenset[int]) -> bool:
    """True if some a < b < c < d has {a, c} in one clique and {b, d} in the other."""
    va, vb = sorted(a), sorted(b)
    for i, x in enumerate(va):
        for y in va[i + 1:]:
            for j, p in enumerate(vb):
                for r in vb[j + 1:]:
                    if x < p < y < r or p < x < r < y:
                        return True
    return False


def necklace_graph(spec: NecklaceSpec) -> Graph:
    """Chain cycle plus every clique's edges, parallel edges collapsed."""
    spec.validate()
    n = spec.n
    edges = [(i, i + 1) for i in range(n - 1)]
    if n >= 3:
        edges.append((n - 1, 0))
    for m in spec.cliques:
        vs = sorted(m)
        edges += [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
    return make_graph(n, edges)


def random_necklace_spec(n: int, q: int, rng: random.Random, attempts: int = 50) -> NecklaceSpec:
    """Random valid spec: cliques are drawn and kept when they stay non-crossing
    and edge-disjoint from the ones already accepted."""
    cliques: list[frozenset[int]] = []
    for _ in range(attempts):
        size = rng.randint(2, max(2, q))
        if size > n:
            continue
        cand = frozenset(rng.sample(range(n), size))
        if all(len(cand & m) <= 1 and not _crossing(cand, m) for m in cliques):
            cliques.append(cand)
    return NecklaceSpec(n, q, tuple(cliques))


# --- high-girth regular graphs -------------------------------------------


def _table_regular(degree: int, girth_min: int) -> Graph | None:
    if degree == 2:
        return cycle_graph(max(girth_min, 3))
    if girth_min <= 3:
        return complete_graph(degree + 1)
    if girth_min <= 4:
        return complete_bipartite_graph(degree, degree)
    if degree == 3 and girth_min <= 5:
        return petersen_graph()
    return None


def _moore_bound(degree: int, girth_min: int) -> int:
    r = (girth_min - 1) // 2
    total = 1 + sum(degree * (degree - 1) ** i for i in range(r))
    if girth_min % 2 == 0:
        total = 2 * sum((degree - 1) ** i for i in range(girth_min // 2))
    return total


def _grow_regular(n: int, degree: int, girth_min: int, rng: random.Random) -> Graph | None:
    """One randomized pairing pass: join deficient vertices at distance >= girth_min - 1."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    deficit = [degree] * n
    open_vs = set(range(n))
    while open_vs:
        u = rng.choice(sorted(open_vs))
        # vertices within distance girth_min - 2 of u are forbidden partners
        near = {u}
        frontier = {u}
        for _ in range(girth_min - 2):
            frontier = {w for x in frontier for w in nbrs[x]} - near
            near |= frontier
        cands = sorted(open_vs - near)
        if not cands:
            return None
        w = rng.choice(cands)
        nbrs[u].add(w)
        nbrs[w].add(u)
        for x in (u, w):
            deficit[x] -= 1
            if deficit[x] == 0:
                open_vs.discard(x)
    return make_graph(n, [(u, w) for u in range(n) for w in nbrs[u] if u < w])


def random_regular_with_girth(degree: int, girth_min: int, seed: int = 0,
                              max_attempts: int = 2000, use_table: bool = True) -> Graph:
    """A ``degree``-regular graph of girth at least ``girth_min``.

    Small cases come from a fixed table (cycles, complete graphs, K_{d,d},
    Petersen). Otherwise a seeded randomized pairing process is retried,
    escalating the vertex count from the Moore bound upwards.
    """
    if degree < 1:
        raise GraphError("degree must be positive")
    if girth_min < 3:
        raise GraphError("girth_min must be at least 3")
    if use_table:
        hit = _table_regular(degree, girth_min)
        if hit is not None:
            return hit
    if degree == 1:
        return make_graph(2, [(0, 1)])
    rng = random.Random(seed)
    n = max(_moore_bound(degree, girth_min), degree + 1)
    per_size = 20
    attempts = 0
    while attempts < max_attempts:
        if (n * degree) % 2:
            n += 1
            continue
        for _ in range(per_size):
            attempts += 1
            g = _grow_regular(n, degree, girth_min, rng)
            if g is not None and is_regular(g, degree) and girth(g) >= girth_min:
                return g
            if attempts >= max_attempts:
                break
        n += 1
    raise GenerationError(
        f"no {degree}-regular graph with girth >= {girth_min} after {attempts} attempts "
        f"(reached {n} vertices)")
