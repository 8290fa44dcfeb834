# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; argument and result contract as in ``_pykernels``.

Graphs are limited to 64 vertices (one machine word per neighbourhood).
"""
from libc.stdint cimport uint64_t, uint8_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"
MAX_VERTICES = 64
MAX_COLORS = 64
MAX_DP_VERTICES = 30

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Search:
    int n
    int k
    uint64_t adj[64]
    int pre[64]
    int color[64]
    int free_idx[64]
    uint64_t colmask[64]
    uint64_t colored
    int used
    long long nodes
    int size_cap
    int diam_cap
    int best
    int order[64]


cdef inline uint64_t nbr(Search* s, uint64_t mask) noexcept nogil:
    cdef uint64_t out = 0
    while mask:
        out |= s.adj[__builtin_ctzll(mask)]
        mask &= mask - 1
    return out


cdef inline uint64_t flood(Search* s, int v, uint64_t within) noexcept nogil:
    cdef uint64_t reach = (<uint64_t>1) << v
    cdef uint64_t frontier = reach
    while frontier:
        frontier = nbr(s, frontier) & within & ~reach
        reach |= frontier
    return reach


cdef bint diameter_exceeds(Search* s, uint64_t comp, int cap) noexcept nogil:
    cdef uint64_t rest = comp, seen, frontier
    cdef int src, ecc
    while rest:
        src = __builtin_ctzll(rest)
        rest &= rest - 1
        seen = (<uint64_t>1) << src
        frontier = seen
        ecc = 0
        while True:
            frontier = nbr(s, frontier) & comp & ~seen
            if not frontier:
                break
            seen |= frontier
            ecc += 1
            if ecc > cap:
                return True
    return False


cdef bint check_vertex(Search* s, int v) noexcept nogil:
    cdef int c = s.color[v]
    cdef uint64_t comp, cu, checked = 0, touch
    cdef int u
    comp = flood(s, v, s.colmask[c])
    if __builtin_popcountll(comp) > s.size_cap:
        return False
    if s.diam_cap >= 0:
        touch = (s.adj[v] | ((<uint64_t>1) << v)) & s.colored
        while touch:
            u = __builtin_ctzll(touch)
            touch &= touch - 1
            if (checked >> u) & 1:
                continue
            cu = flood(s, u, s.colmask[s.color[u]])
            checked |= cu
            if (nbr(s, cu) & ~s.colored) == 0 and diameter_exceeds(s, cu, s.diam_cap):
                return False
    return True


cdef inline bint allowed(Search* s, int v, int c) noexcept nogil:
    if s.pre[v] >= 0:
        return c == s.pre[v]
    return s.free_idx[c] < 0 or s.free_idx[c] <= s.used


cdef inline bint assign(Search* s, int v, int c) noexcept nogil:
    cdef bint fresh = s.free_idx[c] >= 0 and s.free_idx[c] == s.used
    s.color[v] = c
    s.colmask[c] |= (<uint64_t>1) << v
    s.colored |= (<uint64_t>1) << v
    if fresh:
        s.used += 1
    s.nodes += 1
    return fresh


cdef inline void unassign(Search* s, int v, int c, bint fresh) noexcept nogil:
    s.color[v] = -1
    s.colmask[c] &= ~((<uint64_t>1) << v)
    s.colored &= ~((<uint64_t>1) << v)
    if fresh:
        s.used -= 1


cdef bint dfs_find(Search* s, int v) noexcept nogil:
    cdef int c
    cdef bint fresh
    if v == s.n:
        return True
    for c in range(s.k):
        if not allowed(s, v, c):
            continue
        fresh = assign(s, v, c)
        if check_vertex(s, v) and dfs_find(s, v + 1):
            return True
        unassign(s, v, c, fresh)
    return False


cdef void dfs_minmax(Search* s, int i, int cur) noexcept nogil:
    cdef int v, c, size, m
    cdef bint fresh
    if i == s.n:
        s.best = cur
        return
    v = s.order[i]
    for c in range(s.k):
        if not allowed(s, v, c):
            continue
        fresh = s.free_idx[c] >= 0 and s.free_idx[c] == s.used
        s.colmask[c] |= (<uint64_t>1) << v
        if fresh:
            s.used += 1
        s.nodes += 1
        size = __builtin_popcountll(flood(s, v, s.colmask[c]))
        m = cur if cur > size else size
        if m < s.best:
            dfs_minmax(s, i + 1, m)
        s.colmask[c] &= ~((<uint64_t>1) << v)
        if fresh:
            s.used -= 1
        if s.best <= 1:
            return


cdef int setup(Search* s, int n, adj, int k, pre) except -1:
    cdef int i, c, j
    if n > 64:
        raise ValueError("compiled kernels handle at most 64 vertices")
    if k > 64 or k < 1:
        raise ValueError("compiled kernels handle 1..64 colours")
    s.n = n
    s.k = k
    s.colored = 0
    s.used = 0
    s.nodes = 0
    for i in range(64):
        s.adj[i] = 0
        s.pre[i] = -1
        s.color[i] = -1
        s.colmask[i] = 0
        s.free_idx[i] = -1
    fixed = set()
    for i in range(n):
        s.adj[i] = <uint64_t>adj[i]
        s.pre[i] = pre[i]
        if pre[i] >= 0:
            fixed.add(pre[i])
    j = 0
    for c in range(k):
        if c not in fixed:
            s.free_idx[c] = j
            j += 1
    return 0


def find_coloring(int n, adj, int k, pre, prefix, int size_cap, int diam_cap):
    cdef Search* s = <Search*>malloc(sizeof(Search))
    cdef int v, c
    cdef bint found = False
    if s == NULL:
        raise MemoryError()
    try:
        setup(s, n, adj, k, pre)
        s.size_cap = size_cap
        s.diam_cap = diam_cap
        for v in range(len(prefix)):
            c = prefix[v]
            if c < 0 or c >= k or not allowed(s, v, c):
                return None, s.nodes
            assign(s, v, c)
            if not check_vertex(s, v):
                return None, s.nodes
        v = len(prefix)
        with nogil:
            found = dfs_find(s, v)
        if found:
            return [s.color[v] for v in range(n)], s.nodes
        return None, s.nodes
    finally:
        free(s)


def min_max_component(int n, adj, int k, pre, order, int ub):
    cdef Search* s = <Search*>malloc(sizeof(Search))
    cdef int i
    if s == NULL:
        raise MemoryError()
    try:
        setup(s, n, adj, k, pre)
        if n == 0:
            return min(0, ub), 0
        for i in range(n):
            s.order[i] = order[i]
        s.best = ub
        with nogil:
            dfs_minmax(s, 0, 0)
        return s.best, s.nodes
    finally:
        free(s)


cdef inline int qsize(uint64_t* adj, uint64_t S, int v) noexcept nogil:
    cdef uint64_t reach = (<uint64_t>1) << v
    cdef uint64_t frontier = reach, nb, m
    while frontier:
        nb = 0
        m = frontier
        while m:
            nb |= adj[__builtin_ctzll(m)]
            m &= m - 1
        frontier = nb & S & ~reach
        reach |= frontier
    nb = 0
    m = reach
    while m:
        nb |= adj[__builtin_ctzll(m)]
        m &= m - 1
    return __builtin_popcountll(nb & ~(S | ((<uint64_t>1) << v)))


def treewidth_dp(int n, adj, int ub):
    cdef uint64_t cadj[64]
    cdef uint64_t full, S, rest, bit
    cdef uint8_t* tw
    cdef uint8_t* arg
    cdef int v, prev, val, best, bestv, i
    if n > MAX_DP_VERTICES:
        raise ValueError("subset DP limited to 30 vertices")
    if ub > 250:
        ub = 250
    for i in range(64):
        cadj[i] = 0
    for i in range(n):
        cadj[i] = <uint64_t>adj[i]
    full = ((<uint64_t>1) << n) - 1
    tw = <uint8_t*>malloc(full + 1)
    arg = <uint8_t*>malloc(full + 1)
    if tw == NULL or arg == NULL:
        free(tw)
        free(arg)
        raise MemoryError()
    try:
        tw[0] = 0
        arg[0] = 0
        with nogil:
            S = 1
            while S <= full:
                best = ub
                bestv = 0
                rest = S
                while rest:
                    v = __builtin_ctzll(rest)
                    bit = (<uint64_t>1) << v
                    rest &= rest - 1
                    prev = tw[S ^ bit]
                    if prev >= best:
                        continue
                    val = qsize(cadj, S ^ bit, v)
                    if val < prev:
                        val = prev
                    if val < best:
                        best = val
                        bestv = v
                tw[S] = best
                arg[S] = bestv
                S += 1
        if tw[full] >= ub:
            return ub, None
        order = []
        S = full
        while S:
            v = arg[S]
            order.append(v)
            S &= ~((<uint64_t>1) << v)
        order.reverse()
        return tw[full], order
    finally:
        free(tw)
        free(arg)
