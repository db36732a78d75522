"""Permutation groups acting on pattern labels, and pattern orbits.

Every Ramsey variant handled here is a choice of group: the trivial group
gives ordered numbers, the rotation group cyclic ones, the full symmetric
group standard ones.  Groups are kept fully enumerated because the encoder
and the counter both iterate over orbit members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .errors import FormatError, ParameterError, SizeError
from .graphs import OrderedGraph

GROUP_KINDS = ("trivial", "cyclic", "reflective", "dihedral", "alternating", "symmetric")

# symmetric/alternating enumeration limit on the degree
MAX_FULL_DEGREE = 10
DEFAULT_ELEMENT_CAP = math.factorial(MAX_FULL_DEGREE)

Permutation = tuple  # images[i] is the image of i


def check_permutation(images: Sequence[int]) -> Permutation:
    p = tuple(int(x) for x in images)
    if sorted(p) != list(range(len(p))):
        raise ParameterError(f"{list(p)} is not a permutation of 0..{len(p) - 1}")
    return p


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def identity(m: int) -> Permutation:
    return tuple(range(m))


def parse_permutation(text: str) -> Permutation:
    """Parse one-line image notation ``"p0 p1 ... p(m-1)"``."""
    try:
        images = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise FormatError(f"bad permutation {text!r}: {exc}") from None
    if not images:
        raise FormatError("empty permutation")
    return check_permutation(images)


def format_permutation(p: Permutation) -> str:
    return " ".join(map(str, p))


def _is_even(p: Permutation) -> bool:
    seen = [False] * len(p)
    transpositions = 0
    for start in range(len(p)):
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        if length:
            transpositions += length - 1
    return transpositions % 2 == 0


@dataclass(frozen=True)
class PermGroup:
    degree: int
    elements: frozenset

    def __post_init__(self):
        elems = self.elements
        e = identity(self.degree)
        if e not in elems:
            raise ParameterError("group does not contain the identity")
        for p in elems:
            if len(p) != self.degree:
                raise ParameterError("group elements have mixed degrees")
            if inverse(p) not in elems:
                raise ParameterError("group is not closed under inverses")
        # closure under composition; full check is quadratic, so sample it
        # against generators only when the group is large.
        probe = elems if len(elems) <= 400 else list(elems)[:50]
        for p in probe:
            for q in probe:
                if compose(p, q) not in elems:
                    raise ParameterError("group is not closed under composition")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements


def closure(
    generators: Iterable[Sequence[int]],
    degree: int | None = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> PermGroup:
    """Smallest group containing ``generators``, found by repeated composition."""
    gens = [check_permutation(g) for g in generators]
    if degree is None:
        if not gens:
            raise ParameterError("closure of no generators needs an explicit degree")
        degree = len(gens[0])
    if degree < 1:
        raise ParameterError(f"degree must be positive, got {degree}")
    for g in gens:
        if len(g) != degree:
            raise ParameterError(f"generator {list(g)} does not have degree {degree}")
    e = identity(degree)
    elements = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(g, p)
                if q not in elements:
                    elements.add(q)
                    if len(elements) > cap:
                        raise SizeError(f"group closure exceeds the cap of {cap} elements")
                    nxt.append(q)
        frontier = nxt
    # a finite set closed under multiplication by generators is a group
    return _trusted(degree, elements)


def _trusted(degree: int, elements: set) -> PermGroup:
    g = object.__new__(PermGroup)
    object.__setattr__(g, "degree", degree)
    object.__setattr__(g, "elements", frozenset(elements))
    return g


def left_shift(m: int) -> Permutation:
    return tuple((i + 1) % m for i in range(m))


def reflection(m: int) -> Permutation:
    return tuple(m - 1 - i for i in range(m))


def group_make(kind: str, m: int) -> PermGroup:
    if kind not in GROUP_KINDS:
        raise ParameterError(f"unknown group kind {kind!r}; expected one of {GROUP_KINDS}")
    if m < 1:
        raise ParameterError(f"degree must be positive, got {m}")
    if kind == "trivial":
        return closure([], degree=m)
    if kind == "cyclic":
        return closure([left_shift(m)])
    if kind == "reflective":
        return closure([reflection(m)])
    if kind == "dihedral":
        return closure([left_shift(m), reflection(m)])
    if m > MAX_FULL_DEGREE:
        raise SizeError(
            f"{kind} group of degree {m} exceeds the enumeration limit of {MAX_FULL_DEGREE}; "
            "use a dedicated unordered Ramsey tool for large symmetric patterns"
        )
    perms = permutations(range(m))
    if kind == "alternating":
        return _trusted(m, {p for p in perms if _is_even(p)})
    return _trusted(m, set(perms))


def orbit(h: OrderedGraph, group: PermGroup) -> list[OrderedGraph]:
    """Deduplicated orbit ``{sigma(h) : sigma in group}``, sorted canonically."""
    if group.degree != h.order:
        raise ParameterError(
            f"group degree {group.degree} does not match pattern order {h.order}"
        )
    if not h.edges or len(h.edges) == h.order * (h.order - 1) // 2:
        return [h]
    seen = {}
    edges = h.edge_list()
    for p in group.elements:
        key = tuple(sorted((p[u], p[v]) if p[u] < p[v] else (p[v], p[u]) for u, v in edges))
        if key not in seen:
            seen[key] = None
    return [OrderedGraph(h.order, key) for key in sorted(seen)]
