"""Compiled cores against their pure-Python twins on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel with the best-of-N time for each backend and
the speedup.  Results are also checked for agreement.
"""

import argparse
import random
import sys
import time

from ordramsey import _backend
from ordramsey.cnf import encode
from ordramsey.coloring import Coloring
from ordramsey.embeddings import CYCLIC, ORDERED, back_masks
from ordramsey.graphs import make_class


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def embed_case(n, pattern, seed=0):
    rng = random.Random(seed)
    cs = [Coloring(n, tuple(rng.choice((1, 2)) for _ in range(n * (n - 1) // 2))) for _ in range(50)]
    masks = [back_masks(pattern)]
    adjs = [c.masks(1) for c in cs]

    def run(core):
        return lambda: [core.count_ordered(a, n, m, 0) for a in adjs for m in masks]
    return run


def sat_case(h, n, mode):
    inst = encode(h, mode, h, mode, n)

    def run(core):
        def go():
            s = core.CdclSolver(inst.num_vars, inst.clauses)
            return s.solve()
        return go
    return run


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _backend.COMPILED:
        print("compiled cores are not built; run `pip install -e .` with Cython available")
        return 1
    cases = [
        ("count palt 5 in 50 colorings of K_16", _backend.embedcore, _backend.pure_embed,
         embed_case(16, make_class("palt", 5))),
        ("count pmon 6 in 50 colorings of K_20", _backend.embedcore, _backend.pure_embed,
         embed_case(20, make_class("pmon", 6))),
        ("solve pmon 4 ordered, n = 10 (unsat)", _backend.satcore, _backend.pure_sat,
         sat_case(make_class("pmon", 4), 10, ORDERED)),
        ("solve palt 5 ordered, n = 8 (sat)", _backend.satcore, _backend.pure_sat,
         sat_case(make_class("palt", 5), 8, ORDERED)),
        ("solve pmon 5 cyclic, n = 13 (unsat)", _backend.satcore, _backend.pure_sat,
         sat_case(make_class("pmon", 5), 13, CYCLIC)),
    ]
    print(f"{'kernel':44s} {'compiled':>10s} {'pure':>10s} {'speedup':>8s}")
    for name, fast, slow, make in cases:
        tf, rf = best_of(make(fast), args.repeat)
        ts, rs = best_of(make(slow), args.repeat)
        if rf != rs:
            print(f"{name}: backends disagree ({rf!r} vs {rs!r})")
            return 2
        print(f"{name:44s} {tf:9.4f}s {ts:9.4f}s {ts / tf:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
