"""Embedding counts of patterns in colorings: the witness oracle and the score.

A pattern embeds into a coloring under one of three modes:

* ``ordered``: the vertex map is increasing;
* ``cyclic``: increasing up to a rotation of the pattern's vertex sequence,
  counted as tuples (a pattern fixed by some rotation contributes the same
  edge set more than once, as in the tuple-sum score);
* ``group``: an increasing map of some member of the pattern's orbit under a
  permutation group, each distinct member counted once.

All three reduce to increasing-embedding counts of a list of member
patterns, which the bitmask core computes.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ._backend import embedcore
from .coloring import MAX_ORDER, Coloring
from .errors import ParameterError
from .graphs import OrderedGraph, rotate
from .groups import PermGroup, orbit


@dataclass(frozen=True)
class EmbedMode:
    kind: str
    group: PermGroup | None = None

    def __post_init__(self):
        if self.kind not in ("ordered", "cyclic", "group"):
            raise ParameterError(f"unknown embedding mode {self.kind!r}")
        if (self.kind == "group") != (self.group is not None):
            raise ParameterError("group mode needs a group; other modes take none")

    @classmethod
    def of_group(cls, group: PermGroup) -> "EmbedMode":
        return cls("group", group)

    def __repr__(self) -> str:
        if self.group is None:
            return f"EmbedMode({self.kind!r})"
        return f"EmbedMode('group', |G|={len(self.group)}, degree={self.group.degree})"


ORDERED = EmbedMode("ordered")
CYCLIC = EmbedMode("cyclic")


def pattern_members(h: OrderedGraph, mode: EmbedMode) -> list[OrderedGraph]:
    """Patterns whose increasing embeddings make up ``mode``-embeddings of ``h``."""
    if mode.kind == "ordered":
        return [h]
    if mode.kind == "cyclic":
        # rotation t turns the sequence (w_t, ..., w_{m-1}, w_0, ...) into an increasing one
        return [rotate(h, -t) for t in range(h.order)]
    if mode.group.degree != h.order:
        raise ParameterError(
            f"group degree {mode.group.degree} does not match pattern order {h.order}"
        )
    return orbit(h, mode.group)


def back_masks(g: OrderedGraph) -> list[int]:
    """``back[i]``: bitmask of neighbors ``j < i`` of pattern vertex ``i``."""
    back = [0] * g.order
    for u, v in g.edges:
        back[v] |= 1 << u
    return back


@lru_cache(maxsize=256)
def _compiled(h: OrderedGraph, mode: EmbedMode) -> tuple:
    if h.order > MAX_ORDER:
        raise ParameterError(f"patterns are limited to {MAX_ORDER} vertices")
    return tuple(tuple(back_masks(g)) for g in pattern_members(h, mode))


def _check_color(color: int) -> None:
    if color not in (1, 2):
        raise ParameterError(f"color must be 1 or 2, got {color}")


def _count(adj: list[int], n: int, h: OrderedGraph, mode: EmbedMode, limit: int) -> int:
    members = _compiled(h, mode)
    if h.order > n:
        return 0
    total = 0
    for back in members:
        total += embedcore.count_ordered(adj, n, back, limit - total if limit > 0 else 0)
        if 0 < limit <= total:
            break
    return total


def count_embeddings(c: Coloring, h: OrderedGraph, color: int, mode: EmbedMode = ORDERED) -> int:
    _check_color(color)
    if c.order > MAX_ORDER:
        raise ParameterError(f"colorings are limited to {MAX_ORDER} vertices")
    return _count(c.masks(color), c.order, h, mode, 0)


def has_forbidden(c: Coloring, h: OrderedGraph, color: int, mode: EmbedMode = ORDERED) -> bool:
    _check_color(color)
    if c.order > MAX_ORDER:
        raise ParameterError(f"colorings are limited to {MAX_ORDER} vertices")
    return _count(c.masks(color), c.order, h, mode, 1) > 0


def score(
    c: Coloring,
    h1: OrderedGraph,
    h2: OrderedGraph,
    mode1: EmbedMode = ORDERED,
    mode2: EmbedMode = ORDERED,
) -> int:
    """Minus the number of forbidden embeddings; 0 exactly for witnesses."""
    return -count_embeddings(c, h1, 1, mode1) - count_embeddings(c, h2, 2, mode2)


def is_witness(
    c: Coloring,
    h1: OrderedGraph,
    h2: OrderedGraph,
    mode1: EmbedMode = ORDERED,
    mode2: EmbedMode = ORDERED,
) -> bool:
    return not has_forbidden(c, h1, 1, mode1) and not has_forbidden(c, h2, 2, mode2)


def batch_score(
    colorings: Sequence[Coloring],
    h1: OrderedGraph,
    h2: OrderedGraph,
    mode1: EmbedMode = ORDERED,
    mode2: EmbedMode = ORDERED,
    workers: int | None = None,
) -> list[int]:
    """Scores in input order; colorings are scored as independent tasks."""
    # warm the pattern cache once, outside the pool
    _compiled(h1, mode1)
    _compiled(h2, mode2)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(colorings) < 2:
        return [score(c, h1, h2, mode1, mode2) for c in colorings]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: score(c, h1, h2, mode1, mode2), colorings))
