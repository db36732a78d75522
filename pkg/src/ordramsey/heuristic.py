"""Cross-entropy search for avoiding colorings, without a solver.

Each pair of ``K_n`` gets an independent probability of color 2.  A
generation samples colorings, scores them with the embedding counter and
moves the probabilities toward the elite samples.  This replaces a learned
policy with a plain parameter vector; the population / elite / carryover
loop is the same.  Results are lower bounds only: no witness found says
nothing about the Ramsey number.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass
from typing import Callable

from .coloring import Coloring
from .embeddings import batch_score, is_witness
from .errors import ParameterError
from .search import RamseyProblem

log = logging.getLogger(__name__)

Q_MIN, Q_MAX = 0.01, 0.99


@dataclass(frozen=True)
class CeParams:
    population: int = 100
    elite_fraction: float = 0.1
    smoothing: float = 0.7
    max_generations: int = 200
    carryover: int = 5
    seed: int = 0
    workers: int | None = 1
    # wall-clock cap; runs that hit it are no longer reproducible generation for generation
    max_seconds: float | None = None

    def __post_init__(self):
        if self.population < 2:
            raise ParameterError("population must be at least 2")
        if not 0 < self.elite_fraction <= 1:
            raise ParameterError("elite_fraction must lie in (0, 1]")
        if not 0 < self.smoothing <= 1:
            raise ParameterError("smoothing must lie in (0, 1]")
        if self.carryover < 0 or self.max_generations < 0:
            raise ParameterError("carryover and max_generations must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ParameterError("seed must be a 64-bit unsigned integer")

    @property
    def elite_count(self) -> int:
        return max(1, int(self.population * self.elite_fraction))


@dataclass
class CeTrace:
    """Per-generation best scores, for reporting and tests."""

    best: list

    @property
    def best_score(self) -> int | None:
        return self.best[-1] if self.best else None


def _sample(rng: random.Random, q: list[float], n: int) -> Coloring:
    return Coloring(n, tuple(2 if rng.random() < p else 1 for p in q))


def ce_search(
    p: RamseyProblem,
    n: int,
    params: CeParams = CeParams(),
    trace: CeTrace | None = None,
    on_generation: Callable[[int, int], None] | None = None,
) -> Coloring | None:
    """First score-0 coloring of ``K_n`` found, or ``None`` after the budget."""
    if n < 1:
        raise ParameterError(f"n must be positive, got {n}")
    if n < p.h1.order and n < p.h2.order:
        return Coloring.uniform(n, 1)
    rng = random.Random(params.seed)
    npairs = n * (n - 1) // 2
    q = [0.5] * npairs
    kept: list[tuple[int, Coloring]] = []
    best_seen = None
    start = time.monotonic()
    for gen in range(params.max_generations):
        if params.max_seconds is not None and time.monotonic() - start > params.max_seconds:
            log.info("time cap reached after %d generations", gen)
            break
        fresh = [_sample(rng, q, n) for _ in range(params.population)]
        scores = batch_score(fresh, p.h1, p.h2, p.mode1, p.mode2, workers=params.workers)
        # carried-over samples come first so they win ties at the cutoff
        pool = kept + list(zip(scores, fresh))
        order = sorted(range(len(pool)), key=lambda i: (-pool[i][0], i))
        top_score, top = pool[order[0]]
        if best_seen is None or top_score > best_seen:
            best_seen = top_score
        if trace is not None:
            trace.best.append(best_seen)
        if on_generation is not None:
            on_generation(gen, best_seen)
        if top_score == 0:
            if not is_witness(top, p.h1, p.h2, p.mode1, p.mode2):
                raise AssertionError("score 0 sample rejected by the oracle")
            return top
        elite = [pool[i][1] for i in order[: params.elite_count]]
        a = params.smoothing
        for k in range(npairs):
            mean = sum(1 for c in elite if c.colors[k] == 2) / len(elite)
            q[k] = min(Q_MAX, max(Q_MIN, a * mean + (1 - a) * q[k]))
        kept = [pool[i] for i in order[: params.carryover]]
        log.debug("generation %d: best %d", gen, best_seen)
    return None
