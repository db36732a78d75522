"""Ordered graphs on the vertex set {0, ..., n-1}.

Vertex labels carry the order, so an :class:`OrderedGraph` is nothing more
than an order and a set of edges.  Two graphs are equal exactly when both
the order and the edge set agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FormatError, ParameterError

CLASS_IDS = ("pmon", "cmon", "palt", "pralt", "ssc", "mnest", "complete", "qmon")

GRAPH6_MAX_ORDER = 62


@dataclass(frozen=True)
class OrderedGraph:
    order: int
    edges: frozenset

    def __init__(self, order: int, edges: Iterable[Sequence[int]] = ()):
        if order < 1:
            raise ParameterError(f"graph order must be positive, got {order}")
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= order:
                raise ParameterError(f"edge {{{u},{v}}} outside 0..{order - 1}")
            if (u, v) in norm:
                raise ParameterError(f"duplicate edge {{{u},{v}}}")
            norm.add((u, v))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", frozenset(norm))

    def __repr__(self) -> str:
        return f"OrderedGraph({self.order}, {self.edge_list()})"

    def __len__(self) -> int:
        return self.order

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def canonical_key(self) -> tuple:
        return (self.order, tuple(self.edge_list()))

    def relabel(self, images: Sequence[int]) -> "OrderedGraph":
        """Image of the graph under the vertex map ``v -> images[v]``."""
        if len(images) != self.order:
            raise ParameterError(
                f"relabeling of degree {len(images)} applied to graph of order {self.order}"
            )
        return OrderedGraph(self.order, ((images[u], images[v]) for u, v in self.edges))

    def reflect(self) -> "OrderedGraph":
        m = self.order
        return self.relabel([m - 1 - v for v in range(m)])

    def degree_sequence(self) -> list[int]:
        deg = [0] * self.order
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        adj = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def to_edge_text(self) -> str:
        """Debug listing, one ``u v`` pair per line."""
        return "".join(f"{u} {v}\n" for u, v in self.edge_list())


def rotate(g: OrderedGraph, s: int) -> OrderedGraph:
    n = g.order
    return g.relabel([(v + s) % n for v in range(n)])


def _path(order: int, seq: Sequence[int]) -> OrderedGraph:
    return OrderedGraph(order, zip(seq, seq[1:]))


def _alternating_sequence(n: int) -> list[int]:
    seq = []
    lo, hi = 0, n - 1
    while lo <= hi:
        seq.append(lo)
        if hi != lo:
            seq.append(hi)
        lo += 1
        hi -= 1
    return seq


def make_class(class_id: str, n: int, j: int | None = None) -> OrderedGraph:
    """Build a member of one of the named graph classes.

    ``qmon`` is the monotone cycle of order ``n`` with the edge
    ``{j, (j + 1) mod n}`` removed; every other class takes only ``n``.
    """
    if class_id not in CLASS_IDS:
        raise ParameterError(f"unknown graph class {class_id!r}; expected one of {CLASS_IDS}")
    if n < 1:
        raise ParameterError(f"{class_id} needs a positive order, got {n}")
    if j is not None and class_id != "qmon":
        raise ParameterError(f"{class_id} takes no edge index")

    if class_id == "pmon":
        return _path(n, range(n))
    if class_id == "cmon":
        if n < 2:
            raise ParameterError("cmon requires n >= 2")
        if n == 2:
            return OrderedGraph(2, [(0, 1)])
        return OrderedGraph(n, [(v, v + 1) for v in range(n - 1)] + [(0, n - 1)])
    if class_id == "palt":
        return _path(n, _alternating_sequence(n))
    if class_id == "pralt":
        return _path(n, [n - 1 - v for v in _alternating_sequence(n)])
    if class_id == "ssc":
        return OrderedGraph(n, [(0, v) for v in range(1, n)])
    if class_id == "mnest":
        if n < 2 or n % 2:
            raise ParameterError(f"mnest requires even n >= 2, got {n}")
        return OrderedGraph(n, [(v, n - 1 - v) for v in range(n // 2)])
    if class_id == "complete":
        return OrderedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    # qmon
    if n < 3:
        raise ParameterError("qmon requires n >= 3")
    if j is None or not 0 <= j <= n - 1:
        raise ParameterError(f"qmon requires an edge index 0 <= j <= {n - 1}, got {j}")
    cycle = {(v, v + 1) for v in range(n - 1)} | {(0, n - 1)}
    cycle.discard(tuple(sorted((j, (j + 1) % n))))
    return OrderedGraph(n, cycle)


def parse_graph(text: str) -> OrderedGraph:
    """Parse ``class:n[:j]``, ``g6:<graph6>`` or ``edges:n:u-v,u-v,...``."""
    parts = text.strip().split(":")
    head = parts[0]
    try:
        if head == "g6" and len(parts) == 2:
            return graph6_decode(parts[1].encode("ascii"))
        if head == "edges" and len(parts) == 3:
            pairs = []
            for item in filter(None, parts[2].split(",")):
                u, v = item.split("-")
                pairs.append((int(u), int(v)))
            return OrderedGraph(int(parts[1]), pairs)
        if head in CLASS_IDS and len(parts) in (2, 3):
            nums = [int(p) for p in parts[1:]]
            return make_class(head, *nums)
    except ValueError as exc:
        if isinstance(exc, (ParameterError, FormatError)):
            raise
        raise ParameterError(f"cannot parse graph {text!r}: {exc}") from exc
    raise ParameterError(
        f"cannot parse graph {text!r}; use class:n[:j], g6:<code> or edges:n:u-v,..."
    )


# graph6: N(n) as one byte n + 63, then the upper triangle column by column
# (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each + 63.


def _pack6(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    out = bytearray()
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def graph6_encode(g: OrderedGraph) -> bytes:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise ParameterError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    edges = g.edges
    bits = [1 if (i, j) in edges else 0 for j in range(1, n) for i in range(j)]
    return bytes([n + 63]) + _pack6(bits)


def graph6_decode(data: bytes | str) -> OrderedGraph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise FormatError("empty graph6 string", 0)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte!r}", pos)
    n = data[0] - 63
    if n > GRAPH6_MAX_ORDER:
        raise FormatError(f"order field {n} needs the long form (unsupported)", 0)
    if n == 0:
        raise FormatError("graph of order 0 is not representable here", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) != 1 + nbytes:
        raise FormatError(
            f"expected {1 + nbytes} bytes for order {n}, got {len(data)}", min(len(data), 1 + nbytes)
        )
    bits = []
    for byte in data[1:]:
        val = byte - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits", len(data) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return OrderedGraph(n, edges)
