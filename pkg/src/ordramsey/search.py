"""Ramsey numbers by an upward scan over n, with verified witnesses.

At each n the avoidance instance is encoded and solved.  A satisfiable
instance yields a coloring that the embedding oracle must accept, proving
``R >= n + 1``; the first unsatisfiable n is the exact value.  Avoidance is
hereditary under vertex deletion, so the scan never needs to look back.
"""

from __future__ import annotations

import csv
import hashlib
import logging
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from .cnf import encode, model_to_coloring
from .coloring import Coloring
from .embeddings import CYCLIC, ORDERED, EmbedMode, is_witness
from .errors import ConsistencyError, ParameterError
from .graphs import CLASS_IDS, OrderedGraph, graph6_encode, parse_graph
from .groups import PermGroup, group_make
from .solvers import SolveOutcome, solve

log = logging.getLogger(__name__)

# display label -> group kind (None: handled by a dedicated mode)
VARIANTS = {
    "ord": "trivial",
    "cyc": "cyclic",
    "ref": "reflective",
    "dih": "dihedral",
    "alt": "alternating",
    "std": "symmetric",
}
VARIANT_ALIASES = {
    "ordered": "ord",
    "cyclic": "cyc",
    "reflective": "ref",
    "dihedral": "dih",
    "alternating": "alt",
    "standard": "std",
}


def normalize_variant(name: str) -> str:
    name = VARIANT_ALIASES.get(name, name)
    if name not in VARIANTS:
        raise ParameterError(
            f"unknown variant {name!r}; expected one of {sorted(VARIANTS) + sorted(VARIANT_ALIASES)}"
        )
    return name


def mode_for(variant: str, h: OrderedGraph) -> EmbedMode:
    variant = normalize_variant(variant)
    if variant == "ord":
        return ORDERED
    if variant == "cyc":
        return CYCLIC
    return EmbedMode.of_group(group_make(VARIANTS[variant], h.order))


def graph_key(g: OrderedGraph, name: str | None = None) -> tuple[str, str]:
    """(class, params) columns for cache records."""
    if name:
        head, _, rest = name.partition(":")
        if head in CLASS_IDS:
            return head, rest
    return "g6", graph6_encode(g).decode("ascii")


def _group_digest(g: PermGroup) -> str:
    text = ";".join(" ".join(map(str, p)) for p in sorted(g.elements))
    return hashlib.sha1(text.encode()).hexdigest()[:10]


@dataclass(frozen=True)
class RamseyProblem:
    h1: OrderedGraph
    h2: OrderedGraph
    mode1: EmbedMode = ORDERED
    mode2: EmbedMode = ORDERED
    variant: str = "ord"
    name1: str | None = None
    name2: str | None = None

    def __post_init__(self):
        for h, mode in ((self.h1, self.mode1), (self.h2, self.mode2)):
            if mode.group is not None and mode.group.degree != h.order:
                raise ParameterError(
                    f"group degree {mode.group.degree} does not match pattern order {h.order}"
                )

    @classmethod
    def of_variant(cls, h1: OrderedGraph | str, h2: OrderedGraph | str, variant: str) -> "RamseyProblem":
        name1 = h1 if isinstance(h1, str) else None
        name2 = h2 if isinstance(h2, str) else None
        g1 = parse_graph(h1) if isinstance(h1, str) else h1
        g2 = parse_graph(h2) if isinstance(h2, str) else h2
        v = normalize_variant(variant)
        return cls(g1, g2, mode_for(v, g1), mode_for(v, g2), v, name1, name2)

    def swapped(self) -> "RamseyProblem":
        return RamseyProblem(self.h2, self.h1, self.mode2, self.mode1, self.variant, self.name2, self.name1)

    def key(self) -> tuple[str, str, str, str, str]:
        variant = self.variant
        if variant == "custom":
            parts = [m.kind if m.group is None else _group_digest(m.group) for m in (self.mode1, self.mode2)]
            variant = "custom-" + "-".join(parts)
        c1, p1 = graph_key(self.h1, self.name1)
        c2, p2 = graph_key(self.h2, self.name2)
        return variant, c1, p1, c2, p2

    def label(self) -> str:
        return f"R_{self.variant}({self.name1 or self.h1}, {self.name2 or self.h2})"


@dataclass
class RamseyResult:
    lower: int
    upper: int | None = None
    witnesses: dict = field(default_factory=dict)  # n -> Coloring
    witness_paths: dict = field(default_factory=dict)  # n -> path
    provenance: dict = field(default_factory=dict)  # n -> (verdict, solver, wall_s)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.lower if self.exact else None

    def __str__(self) -> str:
        if self.exact:
            return str(self.lower)
        if self.upper is None:
            return f">= {self.lower}"
        return f"{self.lower}..{self.upper}"


def verify_witness(c: Coloring, p: RamseyProblem) -> bool:
    return is_witness(c, p.h1, p.h2, p.mode1, p.mode2)


# ---------------------------------------------------------------------------
# results cache

RECORD_FIELDS = ("variant", "class1", "params1", "class2", "params2", "n", "verdict", "witness_path", "wall_ms")


class ResultsCache:
    """Append-only record file plus graph6 witness files beside it."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.path = self.root / "records.csv"
        self.witness_dir = self.root / "witnesses"
        self.witness_dir.mkdir(exist_ok=True)
        self._lock = threading.Lock()

    def records(self) -> list[dict]:
        if not self.path.exists():
            return []
        with self._lock, open(self.path, newline="") as fh:
            return [dict(zip(RECORD_FIELDS, row)) for row in csv.reader(fh) if row]

    def lookup(self, key: tuple) -> list[dict]:
        return [r for r in self.records() if tuple(r[f] for f in RECORD_FIELDS[:5]) == key]

    def append(self, key: tuple, n: int, verdict: str, witness_path: str = "", wall_ms: int = 0) -> None:
        with self._lock, open(self.path, "a", newline="") as fh:
            csv.writer(fh).writerow([*key, n, verdict, witness_path, wall_ms])

    def write_witness(self, key: tuple, n: int, c: Coloring) -> str:
        stem = "_".join(k.replace(":", "-") for k in key)
        # graph6 codes may contain characters awkward in filenames
        stem = "".join(ch if ch.isalnum() or ch in "-_." else "~" for ch in stem)
        path = self.witness_dir / f"{stem}_n{n}.g6"
        path.write_bytes(c.to_graph6() + b"\n")
        return str(path.relative_to(self.root))

    def read_witness(self, rel: str) -> Coloring:
        return Coloring.from_graph6((self.root / rel).read_bytes().strip())


def _cached_step(cache: ResultsCache, rows: list[dict], n: int, p: RamseyProblem):
    """Reuse a cached verdict at ``n``: ('sat', coloring, path) / ('unsat', None, '') / None."""
    for r in rows:
        if int(r["n"]) != n:
            continue
        if r["verdict"] == "unsat":
            return "unsat", None, ""
        if r["verdict"] == "sat" and r["witness_path"]:
            try:
                c = cache.read_witness(r["witness_path"])
            except (OSError, ValueError):
                continue
            if c.order == n and verify_witness(c, p):
                return "sat", c, r["witness_path"]
    return None


def ramsey_number(
    p: RamseyProblem,
    n_max: int = 64,
    solver: str | None = "auto",
    timeout_s: float | None = None,
    cache: ResultsCache | None = None,
    force: bool = False,
    n_start: int = 1,
    known_upper: int | None = None,
) -> RamseyResult:
    """Scan n upward from ``n_start``; stop at the first UNSAT or unknown.

    ``n_start > 1`` is only sound when avoiding colorings are known to
    exist below it; the scan itself still proves everything it reports.
    ``known_upper`` is a proven upper bound (for instance the cyclic value
    when computing a dihedral one); the scan then stops at
    ``known_upper - 1`` and the UNSAT side is taken from the bound.
    """
    if n_max < 1:
        raise ParameterError("n_max must be at least 1")
    if known_upper is not None and known_upper < n_start:
        raise ParameterError("known_upper must be at least n_start")
    key = p.key()
    rows = [] if cache is None or force else cache.lookup(key)
    result = RamseyResult(lower=n_start)
    last = n_max if known_upper is None else min(n_max, known_upper - 1)
    for n in range(n_start, last + 1):
        step = _cached_step(cache, rows, n, p) if rows else None
        if step is not None:
            verdict, coloring, wpath = step
            result.provenance[n] = (verdict, "cache", 0.0)
        else:
            t0 = time.perf_counter()
            inst = encode(p.h1, p.mode1, p.h2, p.mode2, n)
            outcome: SolveOutcome = solve(inst, solver, timeout_s)
            wall_ms = int((time.perf_counter() - t0) * 1000)
            verdict, coloring, wpath = outcome.verdict, None, ""
            result.provenance[n] = (verdict, outcome.solver, outcome.wall_s)
            if verdict == "sat":
                coloring = model_to_coloring({abs(l): l > 0 for l in outcome.model}, n)
                if not verify_witness(coloring, p):
                    raise ConsistencyError(f"oracle rejected the model for {p.label()} at n={n}")
                if cache is not None:
                    wpath = cache.write_witness(key, n, coloring)
            if cache is not None:
                cache.append(key, n, verdict, wpath, wall_ms)
            log.info("%s n=%d: %s (%s, %d ms)", p.label(), n, verdict, outcome.solver, wall_ms)
        if verdict == "sat":
            result.lower = n + 1
            result.witnesses[n] = coloring
            if wpath:
                result.witness_paths[n] = wpath
            continue
        if verdict == "unsat":
            result.upper = n
        break
    else:
        if known_upper is not None and result.lower == known_upper:
            result.upper = known_upper
            result.provenance[known_upper] = ("unsat", "known upper bound", 0.0)
    if cache is not None:
        final = "value" if result.exact else "lower"
        cache.append(key, result.lower, final, result.witness_paths.get(result.lower - 1, ""), 0)
    return result
