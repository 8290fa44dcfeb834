"""Vertex-disjoint paths and the rho-vortex test for societies."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, Society


class _Network:
    """Unit-capacity flow network with paired residual arcs."""

    def __init__(self, size: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(size)]

    def add(self, a: int, b: int) -> int:
        idx = len(self.head)
        self.head += [b, a]
        self.cap += [1, 0]
        self.out[a].append(idx)
        self.out[b].append(idx + 1)
        return idx

    def augment(self, s: int, t: int) -> bool:
        via = {s: -1}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for idx in self.out[a]:
                b = self.head[idx]
                if self.cap[idx] > 0 and b not in via:
                    via[b] = idx
                    if b == t:
                        queue.clear()
                        break
                    queue.append(b)
        if t not in via:
            return False
        b = t
        while via[b] != -1:
            idx = via[b]
            self.cap[idx] -= 1
            self.cap[idx ^ 1] += 1
            b = self.head[idx ^ 1]
        return True

    def flow(self, idx: int) -> int:
        return self.cap[idx ^ 1]


def disjoint_paths(g: Graph, sources: Iterable[int], sinks: Iterable[int]) -> list[list[int]]:
    """A maximum family of vertex-disjoint paths from ``sources`` to ``sinks``.

    Menger via vertex splitting: vertex ``v`` becomes ``in(v) -> out(v)`` with
    unit capacity, augmenting paths are found by BFS. A vertex in both sets is
    a path of length zero.
    """
    src, snk = sorted(set(sources)), sorted(set(sinks))
    n = g.n
    net = _Network(2 * n + 2)
    S, T = 2 * n, 2 * n + 1
    split = [net.add(2 * v, 2 * v + 1) for v in range(n)]
    arcs: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        arcs[(u, v)] = net.add(2 * u + 1, 2 * v)
        arcs[(v, u)] = net.add(2 * v + 1, 2 * u)
    entry = {v: net.add(S, 2 * v) for v in src}
    exit_ = {v: net.add(2 * v + 1, T) for v in snk}
    while net.augment(S, T):
        pass

    def step(v: int) -> int | None:
        for w in sorted(g.adj[v]):
            if net.flow(arcs[(v, w)]) - net.flow(arcs[(w, v)]) > 0:
                return w
        return None

    paths = []
    for s in src:
        if not net.flow(entry[s]):
            continue
        path = [s]
        v = s
        while not (v in exit_ and net.flow(exit_[v])):
            v = step(v)
            path.append(v)
        paths.append(path)
    assert all(net.flow(split[p[0]]) for p in paths)
    return paths


@dataclass(frozen=True)
class VortexReport:
    holds: bool
    rho: int
    max_paths: int
    # first violating ordered pair and its path family (when not a vortex)
    u: int | None = None
    v: int | None = None
    paths: tuple[tuple[int, ...], ...] = ()

    def to_dict(self) -> dict:
        return {"holds": self.holds, "rho": self.rho, "max_paths": self.max_paths,
                "u": self.u, "v": self.v, "paths": [list(p) for p in self.paths]}


def boundary_intervals(omega: tuple[int, ...], i: int, j: int) -> tuple[list[int], list[int]]:
    """Boundary vertices strictly after ``omega[i]`` and before ``omega[j]``
    cyclically, and those strictly after ``omega[j]`` and before ``omega[i]``."""
    m = len(omega)
    inner = [omega[(i + s) % m] for s in range(1, (j - i) % m)]
    outer = [omega[(j + s) % m] for s in range(1, (i - j) % m)]
    return inner, outer


def vortex_order_check(society: Society, rho: int) -> VortexReport:
    """Whether ``society`` is a rho-vortex: for no ordered pair ``u != v`` of
    boundary vertices are there ``rho + 1`` disjoint paths between
    ``I + u`` and ``J + v`` (``I``, ``J`` the open boundary intervals)."""
    if rho < 0:
        raise ValueError("rho must be nonnegative")
    omega = society.omega
    if len(omega) < 2:
        raise GraphError("a vortex check needs at least two boundary vertices")
    top = 0
    for i in range(len(omega)):
        for j in range(len(omega)):
            if i == j:
                continue
            inner, outer = boundary_intervals(omega, i, j)
            paths = disjoint_paths(society.graph, inner + [omega[i]], outer + [omega[j]])
            top = max(top, len(paths))
            if len(paths) > rho:
                return VortexReport(False, rho, len(paths), omega[i], omega[j],
                                    tuple(tuple(p) for p in paths))
    return VortexReport(True, rho, top)
