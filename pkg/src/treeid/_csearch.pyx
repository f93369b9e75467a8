# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hitting-set search kernel for graphs with at most 64 vertices.

Mirrors ``treeid._search.hit_search`` node for node.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


cdef extern from * nogil:
    int __builtin_popcountll(unsigned long long)
    int __builtin_ctzll(unsigned long long)


cdef struct Ctx:
    long long nodes
    long long limit
    int limit_hit
    uint64_t result


cdef int _dfs(uint64_t* cons, int m, uint64_t chosen, uint64_t allowed,
              int room, uint64_t* buf, Ctx* ctx) noexcept nogil:
    cdef int i, j, k, mc, best_count, packed
    cdef uint64_t a, best, used, low, c
    ctx.nodes += 1
    if ctx.nodes > ctx.limit:
        ctx.limit_hit = 1
        return 0
    if m == 0:
        ctx.result = chosen
        return 1
    if room <= 0:
        return 0
    best = 0
    best_count = 1 << 30
    used = 0
    packed = 0
    for i in range(m):
        a = cons[i] & allowed
        if a == 0:
            return 0
        k = __builtin_popcountll(a)
        if k < best_count:
            best_count = k
            best = a
        if (a & used) == 0:
            used |= a
            packed += 1
    if packed > room:
        return 0
    while best:
        low = best & (~best + 1)
        best ^= low
        mc = 0
        for j in range(m):
            c = cons[j]
            if (c & low) == 0:
                buf[mc] = c
                mc += 1
        if _dfs(buf, mc, chosen | low, allowed & ~low, room - 1, buf + mc, ctx):
            return 1
        if ctx.limit_hit:
            return 0
        allowed &= ~low
    return 0


def hit_search(list constraints, object chosen, object allowed, int budget, long long node_limit):
    cdef Py_ssize_t m0 = len(constraints)
    cdef uint64_t ch = <uint64_t>chosen
    cdef uint64_t al = <uint64_t>allowed
    cdef Ctx ctx
    cdef int found, i, m = 0
    cdef uint64_t c
    # each recursion level stores at most m0 constraints
    cdef Py_ssize_t cap = m0 * (budget + 2) + 1
    cdef uint64_t* buf = <uint64_t*>malloc(cap * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(m0):
            c = <uint64_t>constraints[i]
            if (c & ch) == 0:
                buf[m] = c
                m += 1
        ctx.nodes = 0
        ctx.limit = node_limit
        ctx.limit_hit = 0
        ctx.result = 0
        with nogil:
            found = _dfs(buf, m, ch, al & ~ch, budget - __builtin_popcountll(ch), buf + m, &ctx)
        if ctx.limit_hit:
            return -1, ctx.nodes - 1, True
        if found:
            return int(ctx.result), ctx.nodes, False
        return -1, ctx.nodes, False
    finally:
        free(buf)
