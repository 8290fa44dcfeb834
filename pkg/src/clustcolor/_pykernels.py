"""Pure-Python search kernels.

Reference twin of ``_kernels.pyx``: same arguments, same results, same
tie-breaking. Graphs arrive as lists of neighbourhood bitmasks, colours are
0-based, ``pre[v] == -1`` marks an uncoloured vertex.
"""
from __future__ import annotations

BACKEND = "python"
MAX_VERTICES = MAX_COLORS = MAX_DP_VERTICES = None  # unbounded


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _nbr(adj, mask: int) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def _flood(adj, v: int, within: int) -> int:
    reach = frontier = 1 << v
    while frontier:
        frontier = _nbr(adj, frontier) & within & ~reach
        reach |= frontier
    return reach


def _diameter_exceeds(adj, comp: int, cap: int) -> bool:
    for s in _bits(comp):
        seen = frontier = 1 << s
        ecc = 0
        while True:
            frontier = _nbr(adj, frontier) & comp & ~seen
            if not frontier:
                break
            seen |= frontier
            ecc += 1
            if ecc > cap:
                return True
    return False


def _free_index(k: int, pre) -> list[int]:
    fixed = {c for c in pre if c >= 0}
    idx = [-1] * k
    j = 0
    for c in range(k):
        if c not in fixed:
            idx[c] = j
            j += 1
    return idx


def find_coloring(n, adj, k, pre, prefix, size_cap, diam_cap):
    """Lexicographically least colouring (vertex order 0..n-1) extending ``pre``
    and ``prefix`` whose monochromatic components all have at most ``size_cap``
    vertices and diameter at most ``diam_cap`` (``-1``: unconstrained).

    Unfixed colours are interchangeable, so only colourings whose first uses of
    them appear in increasing order are visited. Returns ``(colours | None, nodes)``.
    """
    free_idx = _free_index(k, pre)
    color = [-1] * n
    colmask = [0] * k
    state = {"colored": 0, "used": 0, "nodes": 0}

    def ok(v: int) -> bool:
        c = color[v]
        if bin(_flood(adj, v, colmask[c])).count("1") > size_cap:
            return False
        if diam_cap >= 0:
            colored = state["colored"]
            checked = 0
            for u in _bits((adj[v] | (1 << v)) & colored):
                if checked >> u & 1:
                    continue
                cu = _flood(adj, u, colmask[color[u]])
                checked |= cu
                if not (_nbr(adj, cu) & ~colored) and _diameter_exceeds(adj, cu, diam_cap):
                    return False
        return True

    def assign(v: int, c: int) -> bool:
        fresh = free_idx[c] >= 0 and free_idx[c] == state["used"]
        color[v] = c
        colmask[c] |= 1 << v
        state["colored"] |= 1 << v
        if fresh:
            state["used"] += 1
        state["nodes"] += 1
        return fresh

    def unassign(v: int, c: int, fresh: bool) -> None:
        color[v] = -1
        colmask[c] &= ~(1 << v)
        state["colored"] &= ~(1 << v)
        if fresh:
            state["used"] -= 1

    def candidates(v: int):
        if pre[v] >= 0:
            return (pre[v],)
        used = state["used"]
        return [c for c in range(k) if free_idx[c] < 0 or free_idx[c] <= used]

    def dfs(v: int) -> bool:
        if v == n:
            return True
        for c in candidates(v):
            fresh = assign(v, c)
            if ok(v) and dfs(v + 1):
                return True
            unassign(v, c, fresh)
        return False

    for v, c in enumerate(prefix):
        if c not in candidates(v):
            return None, state["nodes"]
        assign(v, c)
        if not ok(v):
            return None, state["nodes"]
    if dfs(len(prefix)):
        return list(color), state["nodes"]
    return None, state["nodes"]


def min_max_component(n, adj, k, pre, order, ub):
    """Branch and bound for the least achievable largest monochromatic component.

    Vertices are coloured in ``order``. Returns ``(value, nodes)``; the value is
    ``ub`` when nothing strictly below ``ub`` exists.
    """
    free_idx = _free_index(k, pre)
    colmask = [0] * k
    state = {"best": ub, "used": 0, "nodes": 0}

    def dfs(i: int, cur: int) -> None:
        if i == n:
            state["best"] = cur
            return
        v = order[i]
        if pre[v] >= 0:
            cands = (pre[v],)
        else:
            used = state["used"]
            cands = [c for c in range(k) if free_idx[c] < 0 or free_idx[c] <= used]
        for c in cands:
            fresh = free_idx[c] >= 0 and free_idx[c] == state["used"]
            colmask[c] |= 1 << v
            if fresh:
                state["used"] += 1
            state["nodes"] += 1
            size = bin(_flood(adj, v, colmask[c])).count("1")
            m = cur if cur > size else size
            if m < state["best"]:
                dfs(i + 1, m)
            colmask[c] &= ~(1 << v)
            if fresh:
                state["used"] -= 1
            if state["best"] <= 1:
                return

    if n == 0:
        return min(0, ub), 0
    dfs(0, 0)
    return state["best"], state["nodes"]


def treewidth_dp(n, adj, ub):
    """Subset DP over elimination orderings, values clipped at ``ub``.

    ``TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`` where ``Q(S, v)`` is the set
    of vertices outside ``S + v`` reachable from ``v`` through ``S``. Ties go to
    the smallest ``v``. Returns ``(min(tw, ub), elimination order | None)``.
    """
    full = (1 << n) - 1

    def qsize(s: int, v: int) -> int:
        reach = _flood(adj, v, s)
        return bin(_nbr(adj, reach) & ~(s | (1 << v))).count("1")

    layer = {0: 0}
    arg: dict[int, int] = {}
    for _ in range(n):
        nxt: dict[int, tuple[int, int]] = {}
        for s, val in layer.items():
            for v in _bits(full & ~s):
                w = qsize(s, v)
                if w < val:
                    w = val
                if w >= ub:
                    continue
                s2 = s | (1 << v)
                old = nxt.get(s2)
                if old is None or w < old[0] or (w == old[0] and v < old[1]):
                    nxt[s2] = (w, v)
        layer = {s: wv[0] for s, wv in nxt.items()}
        arg.update((s, wv[1]) for s, wv in nxt.items())
        if not layer:
            return ub, None
    if full not in layer:
        return ub, None
    order = []
    s = full
    while s:
        v = arg[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return layer[full], order
