"""CNF encoding of pattern avoidance, DIMACS I/O and model decoding.

Variable ``var_id(u, v, n)`` is true when the pair ``{u, v}`` has color 2.
A color-1 copy of ``h1`` on tuple ``w`` is excluded by the clause "some
pattern edge has color 2"; a color-2 copy of ``h2`` by "some pattern edge
has color 1".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring
from .embeddings import EmbedMode, pattern_members
from .errors import FormatError, ParameterError
from .graphs import OrderedGraph


def var_id(u: int, v: int, n: int) -> int:
    """1-based row-major index of the pair ``u < v`` in ``K_n``."""
    if not 0 <= u < v <= n - 1:
        raise ParameterError(f"need 0 <= u < v <= {n - 1}, got ({u}, {v})")
    return u * n - u * (u + 1) // 2 + (v - u)


@dataclass
class CnfInstance:
    num_vars: int
    clauses: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ParameterError(f"literal {lit} outside 1..{self.num_vars}")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def _var_table(n: int) -> list[list[int]]:
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            table[u][v] = table[v][u] = var_id(u, v, n)
    return table


def pattern_clauses(
    h: OrderedGraph, mode: EmbedMode, n: int, sign: int
) -> list[tuple[int, ...]]:
    """One clause per forbidden tuple, before deduplication."""
    members = pattern_members(h, mode)
    m = h.order
    if m > n:
        return []
    if not h.edges:
        return [()]
    table = _var_table(n)
    out = []
    for g in members:
        edges = g.edge_list()
        for w in combinations(range(n), m):
            lits = sorted(table[w[a]][w[b]] for a, b in edges)
            out.append(tuple(lits) if sign > 0 else tuple(-x for x in lits))
    return out


def encode(
    h1: OrderedGraph,
    mode1: EmbedMode,
    h2: OrderedGraph,
    mode2: EmbedMode,
    n: int,
    dedup: bool = True,
) -> CnfInstance:
    """Clauses satisfiable exactly by colorings of ``K_n`` avoiding both patterns."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    clauses = pattern_clauses(h1, mode1, n, +1) + pattern_clauses(h2, mode2, n, -1)
    if dedup:
        clauses = list(dict.fromkeys(clauses))
    meta = {"h1": h1, "h2": h2, "mode1": mode1, "mode2": mode2, "n": n}
    return CnfInstance(n * (n - 1) // 2, clauses, meta)


def write_dimacs(inst: CnfInstance) -> str:
    lines = [f"p cnf {inst.num_vars} {len(inst.clauses)}"]
    for c in inst.clauses:
        lines.append(" ".join([*map(str, c), "0"]))
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> CnfInstance:
    num_vars = None
    declared = None
    clauses = []
    cur: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormatError(f"bad problem line {line!r} on line {lineno}")
            num_vars, declared = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise FormatError(f"clause before problem line on line {lineno}")
        try:
            toks = [int(t) for t in line.split()]
        except ValueError:
            raise FormatError(f"non-integer token on line {lineno}") from None
        for t in toks:
            if t == 0:
                clauses.append(tuple(cur))
                cur = []
            else:
                cur.append(t)
    if num_vars is None:
        raise FormatError("missing 'p cnf' line")
    if cur:
        clauses.append(tuple(cur))
    if declared is not None and declared != len(clauses):
        raise FormatError(f"header declares {declared} clauses, found {len(clauses)}")
    return CnfInstance(num_vars, clauses)


def parse_verdict(text: str) -> tuple[str | None, dict[int, bool]]:
    """Read SAT-competition output into (verdict, {var: value})."""
    verdict = None
    values: dict[int, bool] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line.startswith("s "):
            word = line[2:].strip()
            if word == "SATISFIABLE":
                verdict = "sat"
            elif word == "UNSATISFIABLE":
                verdict = "unsat"
            elif word == "UNKNOWN":
                verdict = "unknown"
            else:
                raise FormatError(f"unrecognized status {word!r} on line {lineno}")
        elif line.startswith("v ") or line == "v":
            for tok in line[1:].split():
                try:
                    lit = int(tok)
                except ValueError:
                    raise FormatError(f"bad value token {tok!r} on line {lineno}") from None
                if lit:
                    values[abs(lit)] = lit > 0
    return verdict, values


def model_to_coloring(values: dict[int, bool], n: int) -> Coloring:
    nv = n * (n - 1) // 2
    for var in values:
        if var > nv:
            raise FormatError(f"model assigns variable {var} but K_{n} has {nv}")
    return Coloring(n, tuple(2 if values.get(k) else 1 for k in range(1, nv + 1)))


def parse_model(text: str, n: int) -> Coloring | None:
    """Coloring from solver output; ``None`` when the verdict is UNSAT."""
    verdict, values = parse_verdict(text)
    if verdict == "unsat":
        return None
    if verdict == "unknown" or (verdict is None and not values):
        raise FormatError("solver output has no satisfiable verdict and no value lines")
    return model_to_coloring(values, n)
