"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria marked embedded run with the built-in CDCL solver only.  The
others use an external DIMACS solver (``RAMSEY_SAT_SOLVER`` or ``kissat``
on PATH) and are skipped without one.  Set ``ORDRAMSEY_SKIP_LONG=1`` to
skip the optional palt 8 tier.
"""

import itertools
import os
import time
import warnings

import pytest

from conftest import brute_max_nested, external_solver
from ordramsey.coloring import Coloring
from ordramsey.constructions import (
    CirculantSpec,
    block_coloring,
    circulant_coloring,
    largest_nested_matching_circulant,
    nested_matching_cyclic_coloring,
    nested_matching_ordered_coloring,
)
from ordramsey.cnf import encode
from ordramsey.embeddings import CYCLIC, ORDERED, has_forbidden, is_witness
from ordramsey.graphs import make_class, parse_graph, rotate
from ordramsey.heuristic import CeParams, ce_search
from ordramsey.search import RamseyProblem, ResultsCache, ramsey_number, verify_witness
from ordramsey.solvers import solve
from ordramsey.tables import table_sweep

EXTERNAL = external_solver()
H_UNICYCLIC = "edges:5:0-3,0-4,1-3,1-4,2-4"

# values computed during the session, reused by the sandwich-chain criterion
VALUES = {}


def value(h1, h2, variant, solver, **kw):
    key = (h1, h2, variant)
    if key not in VALUES:
        res = ramsey_number(RamseyProblem.of_variant(h1, h2, variant), solver=solver, **kw)
        assert res.exact, f"{variant} {h1} {h2}: only {res}"
        VALUES[key] = res.value
    return VALUES[key]


def need_external(report, num, title):
    if EXTERNAL is None:
        report(num, title, "SKIP", "no external SAT solver")
        pytest.skip("no external SAT solver")
    return EXTERNAL


def finish(report, num, title, failures, elapsed, budget):
    detail = f"{elapsed:.1f}s of {budget:.0f}s"
    if elapsed > budget:
        failures.append(f"took {elapsed:.1f}s, budget {budget}s")
    ok = not failures
    report(num, title, "PASS" if ok else "FAIL", detail if ok else "; ".join(failures[:5]))
    assert ok, failures


# 1 ---------------------------------------------------------------------------

def test_c01_oracle_equivalence(report):
    title = "SAT satisfiability equals brute force, n <= 6, ordered and cyclic"
    t0 = time.perf_counter()
    names = ["pmon:3", "palt:3", "mnest:4", "complete:3"]
    graphs = {s: parse_graph(s) for s in names}
    failures = []
    for n in range(1, 7):
        colorings = [Coloring(n, bits) for bits in itertools.product((1, 2), repeat=n * (n - 1) // 2)]
        for mode in (ORDERED, CYCLIC):
            # per coloring: which patterns appear in which color
            table = {(s, col): [has_forbidden(c, graphs[s], col, mode) for c in colorings]
                     for s in names for col in (1, 2)}
            for a, b in itertools.product(names, repeat=2):
                brute = any(not x and not y for x, y in zip(table[(a, 1)], table[(b, 2)]))
                inst = encode(graphs[a], mode, graphs[b], mode, n)
                sat = solve(inst, "embedded").verdict == "sat"
                if sat != brute:
                    failures.append(f"{a} vs {b} {mode.kind} n={n}: sat={sat} brute={brute}")
    finish(report, 1, title, failures, time.perf_counter() - t0, 120)


# 2 ---------------------------------------------------------------------------

def test_c02_closed_forms(report):
    title = "closed forms for monotone paths, monotone cycles, nested matchings"
    t0 = time.perf_counter()
    failures = []
    cases = []
    for a, b in itertools.product(range(2, 5), repeat=2):
        cases.append((f"pmon:{a}", f"pmon:{b}", 1 + (a - 1) * (b - 1)))
        cases.append((f"cmon:{a}", f"cmon:{b}", 2 * a * b - 3 * a - 3 * b + 6))
    for a, b in itertools.product((4, 6), repeat=2):
        cases.append((f"mnest:{a}", f"mnest:{b}", a + b - 2))
    for h1, h2, expect in cases:
        got = value(h1, h2, "ord", "embedded")
        if got != expect:
            failures.append(f"R_ord({h1}, {h2}) = {got}, expected {expect}")
    finish(report, 2, title, failures, time.perf_counter() - t0, 120)


# 3 ---------------------------------------------------------------------------

@pytest.mark.external
def test_c03_alternating_paths(report):
    title = "R_ord(palt n, palt n) = 9, 12, 15 for n = 5, 6, 7"
    solver = need_external(report, 3, title)
    t0 = time.perf_counter()
    failures = []
    for m, expect in [(5, 9), (6, 12), (7, 15)]:
        got = value(f"palt:{m}", f"palt:{m}", "ord", solver)
        if got != expect:
            failures.append(f"palt {m}: {got}, expected {expect}")
    finish(report, 3, title, failures, time.perf_counter() - t0, 600)


@pytest.mark.external
@pytest.mark.slow
def test_c03_alternating_path_8(report):
    title = "R_ord(palt 8, palt 8) = 17 (optional long tier)"
    solver = need_external(report, "3b", title)
    if os.environ.get("ORDRAMSEY_SKIP_LONG") == "1":
        report("3b", title, "SKIP", "ORDRAMSEY_SKIP_LONG=1")
        pytest.skip("long tier disabled")
    t0 = time.perf_counter()
    got = value("palt:8", "palt:8", "ord", solver)
    failures = [] if got == 17 else [f"got {got}"]
    finish(report, "3b", title, failures, time.perf_counter() - t0, 1800)


# 4 ---------------------------------------------------------------------------

TABLE4 = {
    0: [16, 16, 16, 16, 17],
    1: [17, 17, 16, 17],
    2: [17, 16, 17],
    3: [16, 17],
    4: [17],
}


@pytest.mark.external
def test_c04_quasi_monotone_matrix(report, tmp_path):
    title = "quasi-monotone 5x5 ordered matrix"
    solver = need_external(report, 4, title)
    t0 = time.perf_counter()
    recs = table_sweep("qmon:5:{}", "qmon:5:{}", range(5), range(5), "ord", solver=solver,
                       cache=ResultsCache(tmp_path))
    failures = []
    for r in recs:
        expect = TABLE4[r.a][r.b - r.a]
        VALUES[(f"qmon:5:{r.a}", f"qmon:5:{r.b}", "ord")] = r.result.value
        if r.result.value != expect:
            failures.append(f"({r.a},{r.b}) = {r.result}, expected {expect}")
    if len(recs) != 15:
        failures.append(f"{len(recs)} cells")
    finish(report, 4, title, failures, time.perf_counter() - t0, 600)


# 5 ---------------------------------------------------------------------------

@pytest.mark.external
def test_c05_cyclic_monotone_table(report):
    title = "R_cyc(pmon a, pmon b), 3 <= a <= b <= 5"
    solver = need_external(report, 5, title)
    t0 = time.perf_counter()
    expect = {(3, 3): 3, (3, 4): 5, (3, 5): 7, (4, 4): 7, (4, 5): 10, (5, 5): 13}
    failures = []
    for (a, b), e in expect.items():
        got = value(f"pmon:{a}", f"pmon:{b}", "cyc", solver)
        if got != e:
            failures.append(f"({a},{b}) = {got}, expected {e}")
    finish(report, 5, title, failures, time.perf_counter() - t0, 600)


# 6 ---------------------------------------------------------------------------

@pytest.mark.external
def test_c06_cyclic_monotone_five(report, tmp_path):
    title = "R_cyc(pmon 5, pmon 5) = 13 with a graph6 witness at n = 12"
    solver = need_external(report, 6, title)
    t0 = time.perf_counter()
    cache = ResultsCache(tmp_path)
    p = RamseyProblem.of_variant("pmon:5", "pmon:5", "cyc")
    res = ramsey_number(p, solver=solver, cache=cache)
    failures = []
    if res.value != 13:
        failures.append(f"got {res}")
    path = res.witness_paths.get(12)
    if not path:
        failures.append("no witness file for n = 12")
    else:
        w = cache.read_witness(path)
        if w.order != 12 or not verify_witness(w, p):
            failures.append("witness file does not verify")
    VALUES[("pmon:5", "pmon:5", "cyc")] = res.value
    finish(report, 6, title, failures, time.perf_counter() - t0, 600)


# 7 ---------------------------------------------------------------------------

@pytest.mark.external
@pytest.mark.slow
def test_c07_permutational_examples(report):
    title = "palt 7: cyc = dih = 11, ref = 14; unicyclic H: ord = ref = 12, cyc = 10, dih = 9"
    solver = need_external(report, 7, title)
    t0 = time.perf_counter()
    failures = []
    p7 = "palt:7"
    got = {}
    got["cyc"] = value(p7, p7, "cyc", solver)
    # dihedral orbits contain every rotation, so R_dih <= R_cyc; the scan
    # proves the SAT side up to R_cyc - 1 and stops early if UNSAT comes first
    got["dih"] = value(p7, p7, "dih", solver, known_upper=got["cyc"])
    got["ref"] = value(p7, p7, "ref", solver)
    for v, e in [("cyc", 11), ("dih", 11), ("ref", 14)]:
        if got[v] != e:
            failures.append(f"palt 7 {v} = {got[v]}, expected {e}")
    for v, e in [("ord", 12), ("ref", 12), ("cyc", 10), ("dih", 9)]:
        g = value(H_UNICYCLIC, H_UNICYCLIC, v, solver)
        if g != e:
            failures.append(f"H {v} = {g}, expected {e}")
    finish(report, 7, title, failures, time.perf_counter() - t0, 1800)


# 8 ---------------------------------------------------------------------------

def test_c08_greedy_nested_matching(report):
    title = "greedy nested matching equals brute-force maximum on circulants, n <= 12"
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 13):
        for d in range(n // 2 + 1):
            for near in (1, 2):
                c = circulant_coloring(CirculantSpec(n, d, near))
                for color in (1, 2):
                    g = len(largest_nested_matching_circulant(c, color))
                    b = brute_max_nested(c, color)
                    if g != b:
                        failures.append(f"n={n} d={d} near={near} color={color}: {g} vs {b}")
    finish(report, 8, title, failures, time.perf_counter() - t0, 60)


# 9 ---------------------------------------------------------------------------

def test_c09_construction_validity(report):
    title = "explicit constructions verify as witnesses"
    t0 = time.perf_counter()
    failures = []
    for a, b in itertools.product(range(2, 6), repeat=2):
        c = block_coloring(a, b)
        for h in ("pmon", "ssc", "complete"):
            if not is_witness(c, make_class(h, a), make_class("pmon", b)):
                failures.append(f"block {h} {a} vs pmon {b}")
    for a, b in itertools.product((4, 6), repeat=2):
        c = nested_matching_ordered_coloring(a, b)
        if not is_witness(c, make_class("mnest", a), make_class("mnest", b)):
            failures.append(f"nested ordered {a},{b}")
    for a, b in [(6, 4), (6, 6)]:
        c = nested_matching_cyclic_coloring(a, b)
        if c.order != a + b - 3 or not is_witness(c, make_class("mnest", a), make_class("mnest", b),
                                                  CYCLIC, CYCLIC):
            failures.append(f"circulant nested {a},{b}")
    finish(report, 9, title, failures, time.perf_counter() - t0, 60)


# 10 --------------------------------------------------------------------------

CHAIN_PAIRS = (
    [(f"pmon:{a}", f"pmon:{b}") for a, b in itertools.product(range(2, 5), repeat=2) if a <= b]
    + [(f"cmon:{a}", f"cmon:{b}") for a, b in itertools.product(range(2, 5), repeat=2) if a <= b]
    + [("mnest:4", "mnest:4"), ("mnest:4", "mnest:6"), ("mnest:6", "mnest:6"),
       ("palt:5", "palt:5"), ("palt:6", "palt:6"), ("pmon:3", "pmon:5"), ("pmon:4", "pmon:5"),
       ("pmon:5", "pmon:5"),
       (H_UNICYCLIC, H_UNICYCLIC)]
)


def _chain_ok(v):
    """Check every link of std <= dih <= cyc, ref <= ord and std <= alt <= ord
    among the variants present in ``v``."""
    links = [("std", "dih"), ("dih", "cyc"), ("dih", "ref"), ("cyc", "ord"), ("ref", "ord"),
             ("std", "alt"), ("alt", "ord"), ("std", "ord"), ("dih", "ord")]
    return [f"{a}={v[a]} > {b}={v[b]}" for a, b in links if a in v and b in v and v[a] > v[b]]


def test_c10_sandwich_chain(report):
    title = "sandwich chain on computed values, cyclic rotation invariance"
    t0 = time.perf_counter()
    failures = []
    for h1, h2 in CHAIN_PAIRS:
        v = {var: value(h1, h2, var, "embedded") for var in ("ord", "cyc", "ref", "dih", "alt", "std")}
        failures += [f"{h1},{h2}: {msg}" for msg in _chain_ok(v)]
    # values from the external-solver criteria, checked among whatever is present
    pairs = {(h1, h2) for h1, h2, _ in VALUES}
    for h1, h2 in pairs:
        v = {var: VALUES[(a, b, var)] for a, b, var in VALUES if (a, b) == (h1, h2)}
        failures += [f"{h1},{h2}: {msg}" for msg in _chain_ok(v)]
    h = make_class("pmon", 4)
    base = value("pmon:4", "pmon:4", "cyc", "embedded")
    for s in range(4):
        res = ramsey_number(RamseyProblem.of_variant(rotate(h, s), h, "cyc"), solver="embedded")
        if res.value != base:
            failures.append(f"rotate(pmon 4, {s}): {res.value} != {base}")
    finish(report, 10, title, failures, time.perf_counter() - t0, 600)


# 11 --------------------------------------------------------------------------

def test_c11_heuristic(report):
    title = "cross-entropy search finds K3/K3 witnesses at n=5 and palt 6 at n=11"
    k3 = RamseyProblem.of_variant("complete:3", "complete:3", "std")
    hits, failures = 0, []
    for seed in range(10):
        t0 = time.perf_counter()
        c = ce_search(k3, 5, CeParams(seed=seed, max_seconds=60))
        if time.perf_counter() - t0 > 60:
            failures.append(f"K3 seed {seed} over a minute")
        hits += c is not None and is_witness(c, k3.h1, k3.h2, k3.mode1, k3.mode2)
    if hits < 9:
        failures.append(f"K3/K3: {hits}/10 runs")
    p6 = RamseyProblem.of_variant("palt:6", "palt:6", "ord")
    params = dict(population=200, elite_fraction=0.05, smoothing=0.3, max_generations=500, max_seconds=300)
    hits6 = 0
    for seed in range(10):
        c = ce_search(p6, 11, CeParams(seed=seed, **params))
        hits6 += c is not None and is_witness(c, p6.h1, p6.h2)
    detail = f"K3 {hits}/10, palt6 {hits6}/10"
    if hits6 < 1:
        warnings.warn("cross-entropy search found no palt 6 witness at n = 11")
        detail += " (palt6 target missed: warning only)"
    ok = not failures
    report(11, title, "PASS" if ok else "FAIL", detail if ok else "; ".join(failures))
    assert ok, failures
