# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled embedding counter over 64-bit adjacency masks.

Mirrors ``_embedcore_py.count_ordered``.  The search runs without the GIL
so batch scoring from a thread pool uses every core.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXV = 64


cdef struct Ctx:
    uint64_t adj[MAXV]
    uint64_t back[MAXV]
    int w[MAXV]
    int n
    int m
    int64_t found
    int64_t limit


cdef inline uint64_t upto(int hi) nogil:
    if hi >= 63:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << (hi + 1)) - 1


cdef bint rec(Ctx* c, int i, int lo) nogil:
    cdef uint64_t cand = upto(c.n - c.m + i) & ~(((<uint64_t>1) << lo) - 1) if lo < 64 else 0
    cdef uint64_t nb = c.back[i]
    cdef int j
    while nb:
        j = __builtin_ctzll(nb)
        nb &= nb - 1
        cand &= c.adj[c.w[j]]
        if not cand:
            return False
    if i == c.m - 1:
        c.found += __builtin_popcountll(cand)
        return c.limit > 0 and c.found >= c.limit
    while cand:
        c.w[i] = __builtin_ctzll(cand)
        cand &= cand - 1
        if rec(c, i + 1, c.w[i] + 1):
            return True
    return False


cdef int64_t count_core(Ctx* c) nogil:
    c.found = 0
    if c.m == 0 or c.m > c.n:
        return 0
    rec(c, 0, 0)
    if c.limit > 0 and c.found > c.limit:
        c.found = c.limit
    return c.found


def count_ordered(adj, int n, back, long long limit=0):
    """Count increasing embeddings; see the pure-Python twin for the contract."""
    cdef Ctx c
    cdef int i
    cdef int64_t res
    if n > MAXV or len(back) > MAXV:
        raise ValueError("engine supports at most 64 vertices")
    c.n = n
    c.m = len(back)
    c.limit = limit
    for i in range(n):
        c.adj[i] = <uint64_t>adj[i]
    for i in range(c.m):
        c.back[i] = <uint64_t>back[i]
    with nogil:
        res = count_core(&c)
    return res
