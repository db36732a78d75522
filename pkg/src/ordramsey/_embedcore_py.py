"""Pure-Python embedding counter, used when the compiled core is absent.

Same contract as the Cython module ``_embedcore``.
"""

from __future__ import annotations


def count_ordered(adj, n, back, limit=0):
    """Count increasing embeddings of a pattern into a host graph.

    ``adj[v]`` is the neighbor bitmask of host vertex ``v``; ``back[i]`` is
    the bitmask of pattern vertices ``j < i`` adjacent to ``i``.  Counting
    stops once ``limit`` embeddings are found (``limit <= 0``: no limit).
    """
    m = len(back)
    if m == 0 or m > n:
        return 0
    nbrs = [[j for j in range(i) if (back[i] >> j) & 1] for i in range(m)]
    w = [0] * m
    found = 0
    last = m - 1

    def rec(i, lo):
        nonlocal found
        hi = n - m + i
        cand = ((1 << (hi + 1)) - 1) >> lo << lo
        for j in nbrs[i]:
            cand &= adj[w[j]]
            if not cand:
                return False
        if i == last:
            found += bin(cand).count("1")
            return 0 < limit <= found
        while cand:
            low = cand & -cand
            w[i] = low.bit_length() - 1
            if rec(i + 1, w[i] + 1):
                return True
            cand ^= low
        return False

    rec(0, 0)
    if limit > 0 and found > limit:
        found = limit
    return found
