"""Shared fixtures and an independent brute-force embedding oracle.

The oracle walks explicit tuples and applies permutations directly; it
does not import the bitmask counter or the orbit code it checks.
"""

import itertools
import os
import random
import shutil

import pytest

from ordramsey.coloring import Coloring


def brute_orbit(edges, m, perms):
    out = set()
    for p in perms:
        out.add(frozenset(tuple(sorted((p[u], p[v]))) for u, v in edges))
    return out


def brute_count(c: Coloring, edges, m, color, mode="ordered", perms=None):
    """Count embeddings by listing every increasing tuple.

    ordered: the identity labeling; cyclic: vertex i goes to w[(i + t) % m]
    for every t; group: each distinct relabeled edge set once.
    """
    n = c.order
    if m > n:
        return 0
    if mode == "ordered":
        patterns = [frozenset(edges)]
    elif mode == "cyclic":
        patterns = [frozenset(tuple(sorted(((u - t) % m, (v - t) % m))) for u, v in edges)
                    for t in range(m)]
    else:
        patterns = list(brute_orbit(edges, m, perms))
    total = 0
    for w in itertools.combinations(range(n), m):
        for pat in patterns:
            if all(c.color(w[u], w[v]) == color for u, v in pat):
                total += 1
    return total


def all_colorings(n):
    k = n * (n - 1) // 2
    for bits in itertools.product((1, 2), repeat=k):
        yield Coloring(n, bits)


def random_coloring(rng: random.Random, n: int, p2: float = 0.5) -> Coloring:
    return Coloring(n, tuple(2 if rng.random() < p2 else 1 for _ in range(n * (n - 1) // 2)))


def external_solver():
    path = os.environ.get("RAMSEY_SAT_SOLVER") or shutil.which("kissat")
    if path and os.path.isfile(path) and os.access(path, os.X_OK):
        return path
    return None


@pytest.fixture
def solver_path():
    path = external_solver()
    if path is None:
        pytest.skip("no external SAT solver (set RAMSEY_SAT_SOLVER)")
    return path


def brute_max_nested(c: Coloring, color: int) -> int:
    """Largest p with 2p vertices that, read from some rotation of their
    cyclic order, pair first-last, second-second-last, ... in ``color``."""
    n = c.order
    best = 0
    for k in range(2, n + 1, 2):
        p = k // 2
        found = False
        for xs in itertools.combinations(range(n), k):
            for t in range(k):
                y = xs[t:] + xs[:t]
                if all(c.color(*sorted((y[i], y[k - 1 - i]))) == color for i in range(p)):
                    found = True
                    break
            if found:
                break
        if not found:
            break
        best = p
    return best


# one line per acceptance criterion, repeated in the terminal summary
ACCEPTANCE_LINES = []


@pytest.fixture
def report(capsys):
    def _report(num, title, status, detail=""):
        line = f"criterion {num:>2} {status}: {title}" + (f" [{detail}]" if detail else "")
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
