"""Two-edge-colorings of complete graphs.

Colors are 1 and 2.  Pairs are stored in row-major order
``(0,1), (0,2), ..., (0,n-1), (1,2), ...``, which is also the SAT variable
order, so a coloring is just the polarity vector of a model: a true
variable means color 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ParameterError
from .graphs import OrderedGraph, graph6_decode, graph6_encode

MAX_ORDER = 64


def pair_index(u: int, v: int, n: int) -> int:
    """0-based row-major index of the pair ``u < v``."""
    return u * n - u * (u + 1) // 2 + (v - u) - 1


@dataclass(frozen=True)
class Coloring:
    order: int
    colors: tuple

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise ParameterError(f"coloring order must be positive, got {n}")
        if len(self.colors) != n * (n - 1) // 2:
            raise ParameterError(
                f"coloring of K_{n} needs {n * (n - 1) // 2} pair colors, got {len(self.colors)}"
            )
        if any(c not in (1, 2) for c in self.colors):
            raise ParameterError("colors must be 1 or 2")

    @classmethod
    def uniform(cls, n: int, color: int = 1) -> "Coloring":
        return cls(n, (color,) * (n * (n - 1) // 2))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], int]) -> "Coloring":
        return cls(n, tuple(fn(u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def from_color2_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Coloring":
        colors = [1] * (n * (n - 1) // 2)
        for u, v in edges:
            if u > v:
                u, v = v, u
            colors[pair_index(u, v, n)] = 2
        return cls(n, tuple(colors))

    @classmethod
    def from_graph6(cls, data: bytes | str) -> "Coloring":
        g = graph6_decode(data)
        return cls.from_color2_edges(g.order, g.edges)

    def color(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        if u == v or u < 0 or v >= self.order:
            raise ParameterError(f"no pair {{{u},{v}}} in K_{self.order}")
        return self.colors[pair_index(u, v, self.order)]

    def pairs(self):
        n = self.order
        k = 0
        for u in range(n):
            for v in range(u + 1, n):
                yield u, v, self.colors[k]
                k += 1

    def color_graph(self, color: int) -> OrderedGraph:
        return OrderedGraph(self.order, [(u, v) for u, v, c in self.pairs() if c == color])

    def masks(self, color: int) -> list[int]:
        """Per-vertex neighbor bitmask of the ``color`` subgraph."""
        adj = [0] * self.order
        for u, v, c in self.pairs():
            if c == color:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj

    def induced(self, vertices: Sequence[int]) -> "Coloring":
        vs = sorted(vertices)
        return Coloring.from_function(len(vs), lambda i, j: self.color(vs[i], vs[j]))

    def reflect(self) -> "Coloring":
        n = self.order
        return Coloring.from_function(n, lambda u, v: self.color(n - 1 - v, n - 1 - u))

    def shift(self, s: int = 1) -> "Coloring":
        n = self.order
        return Coloring.from_function(n, lambda u, v: self.color((u - s) % n, (v - s) % n))

    def to_graph6(self) -> bytes:
        """graph6 of the color-2 subgraph."""
        return graph6_encode(self.color_graph(2))

    def to_model(self) -> list[int]:
        return [k + 1 if c == 2 else -(k + 1) for k, c in enumerate(self.colors)]
