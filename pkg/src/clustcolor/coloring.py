"""Monochromatic components, exhaustive colouring searches, and clustered
2-colourings from tree-decompositions."""
from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import kernels
from .bounds import adov_bound, recolor_budget
from .decomp import DecompositionError, TreeDecomposition, validate_td
from .graph import Graph, component_diameter, components, max_degree
from .treewidth import SizeLimitError

DEFAULT_BUDGET = 2 ** 26
EXACT_LIMIT = 16


class BudgetExceeded(RuntimeError):
    """The exhaustive search space is larger than the allowed budget."""

    def __init__(self, count: int, budget: int):
        super().__init__(f"{count} canonical colourings exceed the budget of {budget}")
        self.count = count
        self.budget = budget


@dataclass(frozen=True)
class Coloring:
    """Colours ``1..k``, one per vertex."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("a colouring needs at least one colour")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colours {sorted(set(bad))} outside 1..{self.k}")

    def check(self, g: Graph) -> None:
        if len(self.colors) != g.n:
            raise ValueError(f"colouring covers {len(self.colors)} of {g.n} vertices")

    def to_dict(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        return cls(int(data["k"]), tuple(int(c) for c in data["colors"]))


@dataclass(frozen=True)
class MonoReport:
    components: tuple[tuple[int, tuple[int, ...]], ...]
    max_size: int
    max_diameter: int

    def to_dict(self) -> dict:
        return {
            "components": [{"color": c, "vertices": list(vs)} for c, vs in self.components],
            "max_size": self.max_size,
            "max_diameter": self.max_diameter,
        }


def mono_components(g: Graph, c: Coloring) -> MonoReport:
    """Partition into monochromatic components, listed by smallest vertex."""
    c.check(g)
    comps = []
    for color in range(1, c.k + 1):
        cls = [v for v in range(g.n) if c.colors[v] == color]
        for comp in components(g, cls):
            comps.append((color, tuple(comp)))
    comps.sort(key=lambda item: item[1][0])
    return MonoReport(
        tuple(comps),
        max((len(vs) for _, vs in comps), default=0),
        max((component_diameter(g, vs) for _, vs in comps), default=0),
    )


def max_component_size(g: Graph, colors) -> int:
    seen = [False] * g.n
    best = 0
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        size = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w] and colors[w] == colors[s]:
                    seen[w] = True
                    size += 1
                    queue.append(w)
        best = max(best, size)
    return best


# --- recolouring ---------------------------------------------------------------


@dataclass(frozen=True)
class RecolorReport:
    passed: bool
    union_size: int
    budget: int
    max_outside: int
    k_size: int

    def to_dict(self) -> dict:
        return {"passed": self.passed, "union_size": self.union_size, "budget": self.budget,
                "max_outside": self.max_outside, "k_size": self.k_size}


def check_recolor_bound(g: Graph, base: Coloring, k_size: int, z: Iterable[int],
                        recolored: Coloring) -> RecolorReport:
    """Measure a recolouring of ``z`` against ``|Z| (Delta k + 1)``.

    Passes when the monochromatic components meeting ``z`` cover at most that
    many vertices and every other component still has at most ``k_size``.
    Precondition violations raise ``ValueError``.
    """
    z = set(z)
    base.check(g)
    recolored.check(g)
    if any(not 0 <= v < g.n for v in z):
        raise ValueError("Z contains non-vertices")
    changed = [v for v in range(g.n) if base.colors[v] != recolored.colors[v]]
    if not set(changed) <= z:
        raise ValueError(f"recolouring changes vertices outside Z: {sorted(set(changed) - z)}")
    if mono_components(g, base).max_size > k_size:
        raise ValueError(f"base colouring has a component larger than {k_size}")
    report = mono_components(g, recolored)
    union = sum(len(vs) for _, vs in report.components if z & set(vs))
    outside = max((len(vs) for _, vs in report.components if not z & set(vs)), default=0)
    budget = recolor_budget(len(z), max_degree(g), k_size)
    return RecolorReport(union <= budget and outside <= k_size, union, budget, outside, k_size)


# --- exhaustive searches -------------------------------------------------------


@dataclass(frozen=True)
class Predicate:
    """``size``: some component has at least ``value`` vertices;
    ``diameter``: some component has diameter greater than ``value``."""

    kind: str
    value: int

    def __post_init__(self):
        if self.kind not in ("size", "diameter"):
            raise ValueError(f"unknown predicate kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "Predicate":
        kind, _, value = text.partition(":")
        kind = {"diam": "diameter"}.get(kind, kind)
        try:
            return cls(kind, int(value))
        except ValueError:
            raise ValueError(f"predicate must look like size:N or diam:D, got {text!r}") from None

    def caps(self, n: int) -> tuple[int, int]:
        """Kernel (size_cap, diam_cap) describing colourings that avoid the predicate."""
        if self.kind == "size":
            return self.value - 1, -1
        return n, self.value

    def __str__(self):
        return f"size>={self.value}" if self.kind == "size" else f"diameter>{self.value}"


@dataclass(frozen=True)
class ForallResult:
    holds: bool
    predicate: Predicate
    k: int
    canonical_colorings: int
    witness: Coloring | None = None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "predicate": str(self.predicate), "k": self.k,
                "canonical_colorings": self.canonical_colorings,
                "witness": None if self.witness is None else list(self.witness.colors)}


def _precolor_vector(g: Graph, k: int, precolored: Mapping[int, int] | None) -> list[int]:
    pre = [-1] * g.n
    for v, c in (precolored or {}).items():
        if not 0 <= v < g.n:
            raise ValueError(f"precoloured vertex {v} is not in the graph")
        if not 1 <= c <= k:
            raise ValueError(f"precolour {c} of vertex {v} outside 1..{k}")
        pre[v] = c - 1
    return pre


def canonical_count(n: int, k: int, pre: list[int] | None = None) -> int:
    """Number of colourings visited by the symmetry-reduced enumeration."""
    pre = pre if pre is not None else [-1] * n
    fixed = len({c for c in pre if c >= 0})
    free = k - fixed
    counts = {0: 1}
    for v in range(n):
        if pre[v] >= 0:
            continue
        nxt: dict[int, int] = {}
        for used, ways in counts.items():
            nxt[used] = nxt.get(used, 0) + ways * (fixed + used)
            if used < free:
                nxt[used + 1] = nxt.get(used + 1, 0) + ways
        counts = nxt
    return sum(counts.values())


def _prefixes(n: int, k: int, pre: list[int], length: int) -> list[list[int]]:
    free_idx = [-1] * k
    j = 0
    for c in range(k):
        if c not in set(pre):
            free_idx[c] = j
            j += 1
    out: list[list[int]] = []

    def grow(prefix, used):
        v = len(prefix)
        if v == length:
            out.append(list(prefix))
            return
        cands = [pre[v]] if pre[v] >= 0 else [
            c for c in range(k) if free_idx[c] < 0 or free_idx[c] <= used]
        for c in cands:
            prefix.append(c)
            grow(prefix, used + (free_idx[c] >= 0 and free_idx[c] == used))
            prefix.pop()

    grow([], 0)
    return out


def search_coloring(g: Graph, k: int, pre: list[int], size_cap: int, diam_cap: int,
                    threads: int = 1, backend: str | None = None) -> list[int] | None:
    """Lexicographically least colouring (0-based) meeting the caps, or None.

    With several threads the canonical prefixes of the first few vertices are
    searched in parallel and the first prefix (in order) holding a solution
    wins, so the answer does not depend on ``threads``.
    """
    kern = kernels.get(backend, g.n, k)
    adj = list(g.adj_masks)
    if threads <= 1 or g.n < 2:
        colors, _ = kern.find_coloring(g.n, adj, k, pre, [], size_cap, diam_cap)
        return colors
    length = 1
    prefixes = _prefixes(g.n, k, pre, length)
    while len(prefixes) < 4 * threads and length < g.n:
        length += 1
        prefixes = _prefixes(g.n, k, pre, length)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(kern.find_coloring, g.n, adj, k, pre, p, size_cap, diam_cap)
                   for p in prefixes]
        for i, fut in enumerate(futures):
            colors, _ = fut.result()
            if colors is not None:
                for rest in futures[i + 1:]:
                    rest.cancel()
                return colors
    return None


def forall_colorings_check(g: Graph, k: int, predicate: Predicate, budget: int = DEFAULT_BUDGET,
                           threads: int = 1, backend: str | None = None) -> ForallResult:
    """Does every k-colouring have a monochromatic component meeting ``predicate``?

    On failure the lexicographically least counterexample is returned.
    """
    if k < 1:
        raise ValueError("k must be positive")
    count = canonical_count(g.n, k)
    if count > budget:
        raise BudgetExceeded(count, budget)
    if predicate.kind == "size" and predicate.value <= 1 and g.n > 0:
        return ForallResult(True, predicate, k, count)
    size_cap, diam_cap = predicate.caps(g.n)
    found = search_coloring(g, k, [-1] * g.n, size_cap, diam_cap, threads, backend)
    if found is None:
        return ForallResult(True, predicate, k, count)
    return ForallResult(False, predicate, k, count, Coloring(k, tuple(c + 1 for c in found)))


def _bfs_order(g: Graph, starts: list[int]) -> list[int]:
    order, seen = [], set()
    for root in list(starts) + list(range(g.n)):
        if root in seen:
            continue
        if root in starts:
            queue = deque(s for s in starts if s not in seen)
            seen.update(starts)
        else:
            queue = deque([root])
            seen.add(root)
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def exact_min_max_mono(g: Graph, k: int, precolored: Mapping[int, int] | None = None,
                       limit: int = EXACT_LIMIT, threads: int = 1,
                       backend: str | None = None) -> tuple[int, Coloring]:
    """Least possible largest monochromatic component over k-colourings extending
    ``precolored`` (colours ``1..k``), with the lexicographically least witness.

    The value comes from branch and bound in BFS order from the precoloured
    vertices; the witness from a separate lexicographic feasibility search.
    """
    if g.n > limit:
        raise SizeLimitError(f"{g.n} vertices exceeds the exact colouring limit {limit}")
    if k < 1:
        raise ValueError("k must be positive")
    pre = _precolor_vector(g, k, precolored)
    if g.n == 0:
        return 0, Coloring(k, ())
    kern = kernels.get(backend, g.n, k)
    order = _bfs_order(g, sorted(v for v in range(g.n) if pre[v] >= 0))
    best, _ = kern.min_max_component(g.n, list(g.adj_masks), k, pre, order, g.n + 1)
    witness = search_coloring(g, k, pre, best, -1, threads, backend)
    assert witness is not None
    return best, Coloring(k, tuple(c + 1 for c in witness))


# --- layered 2-colouring ------------------------------------------------------


@dataclass(frozen=True)
class TwoColoringReport:
    width: int
    max_degree: int
    bound: int
    max_component: int
    block_size: int
    passed: bool

    def to_dict(self) -> dict:
        return {"width": self.width, "max_degree": self.max_degree, "bound": self.bound,
                "max_component": self.max_component, "block_size": self.block_size,
                "passed": self.passed}


def bag_depths(g: Graph, td: TreeDecomposition, root: int = 0) -> list[int]:
    """Depth (from ``root``) of the topmost bag holding each vertex."""
    tree_adj: list[list[int]] = [[] for _ in td.bags]
    for a, b in td.tree_edges:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    depth = {root: 0}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for s in tree_adj[t]:
            if s not in depth:
                depth[s] = depth[t] + 1
                queue.append(s)
    top = [g.n + len(td.bags)] * g.n
    for t, bag in enumerate(td.bags):
        for v in bag:
            top[v] = min(top[v], depth[t])
    return top


def td_two_coloring(g: Graph, td: TreeDecomposition) -> tuple[Coloring, TwoColoringReport]:
    """2-colour by bands of bag depth and verify against ``24 w Delta``.

    Each vertex gets the depth of its topmost bag in the decomposition rooted at
    node 0 and colour ``(depth // b) % 2 + 1``; the band width ``b`` ranges over
    ``1..w+1`` and the smallest one with the least largest component is kept.
    The bound is checked on the instance, not guaranteed.
    """
    problems = validate_td(g, td)
    if problems:
        raise DecompositionError("; ".join(problems))
    w, delta = td.width, max_degree(g)
    if w < 1 or delta < 1:
        raise ValueError("needs a graph with at least one edge")
    depth = bag_depths(g, td)
    best = None
    for b in range(1, w + 2):
        colors = tuple((d // b) % 2 + 1 for d in depth)
        size = max_component_size(g, colors)
        if best is None or size < best[0]:
            best = (size, b, colors)
    size, b, colors = best
    bound = adov_bound(w, delta)
    return Coloring(2, colors), TwoColoringReport(w, delta, bound, size, b, size <= bound)
