"""Explicit avoiding colorings, and the greedy nested-matching search.

These give lower bounds without any solver; the embedding oracle checks
them in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .coloring import Coloring
from .errors import ParameterError


def block_coloring(a: int, b: int) -> Coloring:
    """``K_{(a-1)(b-1)}``: color 1 inside consecutive blocks of size a-1, else 2."""
    if a < 2 or b < 2:
        raise ParameterError(f"block coloring needs a, b >= 2, got ({a}, {b})")
    n = (a - 1) * (b - 1)
    return Coloring.from_function(n, lambda u, v: 1 if u // (a - 1) == v // (a - 1) else 2)


def block_coloring_cyclic(a: int, b: int) -> Coloring:
    """Same rule on ``K_{(a-1)(b-2)}``; avoids cyclic monotone paths of order b in color 2."""
    if a < 2 or b < 3:
        raise ParameterError(f"cyclic block coloring needs a >= 2, b >= 3, got ({a}, {b})")
    n = (a - 1) * (b - 2)
    return Coloring.from_function(n, lambda u, v: 1 if u // (a - 1) == v // (a - 1) else 2)


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    threshold: int
    near_color: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if not 0 <= self.threshold <= self.n // 2:
            raise ParameterError(f"threshold must lie in 0..{self.n // 2}, got {self.threshold}")
        if self.near_color not in (1, 2):
            raise ParameterError("near_color must be 1 or 2")


def circular_distance(u: int, v: int, n: int) -> int:
    d = abs(u - v)
    return min(d, n - d)


def circulant_coloring(spec: CirculantSpec) -> Coloring:
    near = spec.near_color
    far = 3 - near
    n, d = spec.n, spec.threshold
    return Coloring.from_function(n, lambda u, v: near if circular_distance(u, v, n) <= d else far)


def nested_matching_ordered_coloring(a: int, b: int) -> Coloring:
    """``K_{a+b-3}`` with color 2 exactly on pairs inside ``[a/2 - 1, n - a/2]``."""
    if a < 2 or b < 2 or a % 2 or b % 2:
        raise ParameterError(f"need even a, b >= 2, got ({a}, {b})")
    n = a + b - 3
    lo, hi = a // 2 - 1, n - a // 2
    return Coloring.from_function(n, lambda u, v: 2 if lo <= u <= hi and lo <= v <= hi else 1)


def nested_matching_cyclic_coloring(a: int, b: int) -> Coloring:
    """Circulant witness on ``K_{a+b-3}`` against cyclic nested matchings.

    Needs one of a, b congruent to 2 mod 4; the color of short pairs is the
    one whose matching order has that residue.
    """
    if a < 2 or b < 2 or a % 2 or b % 2:
        raise ParameterError(f"need even a, b >= 2, got ({a}, {b})")
    n = a + b - 3
    if a % 4 == 2:
        return circulant_coloring(CirculantSpec(n, a // 2 - 1, 1))
    if b % 4 == 2:
        return circulant_coloring(CirculantSpec(n, b // 2 - 1, 2))
    raise ParameterError("one of a, b must be 2 mod 4")


def nested_matching_star_cyclic_coloring(a: int, b: int) -> Coloring:
    """Circulant witness against a cyclic nested matching of order a (color 1)
    and a star of order b (color 2).

    Covers ``4 | a`` with odd ``b >= 5`` on ``K_{a+b-4}``, and ``a = 2 mod 4``
    or even ``b`` on ``K_{a+b-3}``.
    """
    if a < 2 or a % 2 or b < 2:
        raise ParameterError(f"need even a >= 2 and b >= 2, got ({a}, {b})")
    if a % 4 == 2:
        return circulant_coloring(CirculantSpec(a + b - 3, a // 2 - 1, 1))
    if b % 2 == 0:
        return circulant_coloring(CirculantSpec(a + b - 3, b // 2 - 1, 2))
    if b >= 5:
        return circulant_coloring(CirculantSpec(a + b - 4, (b - 3) // 2, 2))
    raise ParameterError(f"no circulant construction for a={a}, b={b}")


def is_shift_invariant(c: Coloring) -> bool:
    return c.shift(1) == c


def largest_nested_matching_circulant(c: Coloring, color: int) -> list[tuple[int, int]]:
    """Greedy largest nested matching of ``color`` in a circulant coloring.

    Vertex ``j - 1`` is matched to the farthest vertex below the previous
    partner that it sees in ``color``; on shift-invariant colorings this is
    as large as any nested matching with vertices in cyclic order.
    """
    if color not in (1, 2):
        raise ParameterError(f"color must be 1 or 2, got {color}")
    if not is_shift_invariant(c):
        raise ParameterError("coloring is not invariant under the cyclic shift")
    n = c.order
    matching = []
    prev = n
    u = 0
    while True:
        partners = [w for w in range(u + 1, prev) if c.color(u, w) == color]
        if not partners:
            break
        prev = max(partners)
        matching.append((u, prev))
        u += 1
    return matching


def export_construction(c: Coloring, path: str | Path, name: str, params: dict) -> tuple[Path, Path]:
    """Write the color-2 graph as graph6 plus a sidecar naming the construction."""
    path = Path(path)
    g6 = path.with_suffix(".g6")
    g6.write_bytes(c.to_graph6() + b"\n")
    side = path.with_suffix(".txt")
    lines = [f"construction: {name}", f"order: {c.order}"]
    lines += [f"{k}: {v}" for k, v in params.items()]
    side.write_text("\n".join(lines) + "\n")
    return g6, side
