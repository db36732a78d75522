import itertools
import math

import pytest

from ordramsey.errors import FormatError, ParameterError, SizeError
from ordramsey.graphs import make_class, OrderedGraph
from ordramsey.groups import (
    PermGroup,
    closure,
    compose,
    format_permutation,
    group_make,
    identity,
    inverse,
    left_shift,
    orbit,
    parse_permutation,
    reflection,
)


@pytest.mark.parametrize("m", range(1, 8))
def test_group_sizes(m):
    assert len(group_make("trivial", m)) == 1
    assert len(group_make("cyclic", m)) == m
    assert len(group_make("reflective", m)) == (1 if m == 1 else 2)
    assert len(group_make("dihedral", m)) == {1: 1, 2: 2}.get(m, 2 * m)
    assert len(group_make("symmetric", m)) == math.factorial(m)
    assert len(group_make("alternating", m)) == max(1, math.factorial(m) // 2)


def test_named_examples():
    assert len(group_make("cyclic", 5)) == 5
    assert len(group_make("dihedral", 5)) == 10
    assert len(group_make("alternating", 4)) == 12


def test_size_guard():
    with pytest.raises(SizeError, match="10"):
        group_make("symmetric", 11)
    with pytest.raises(SizeError):
        group_make("alternating", 12)
    assert len(group_make("dihedral", 30)) == 60
    with pytest.raises(ParameterError):
        group_make("cyclic", 0)
    with pytest.raises(ParameterError):
        group_make("bogus", 3)


def test_closure_examples():
    assert closure([], degree=4).elements == {identity(4)}
    assert len(closure([left_shift(4)])) == 4
    assert len(closure([left_shift(4), reflection(4)])) == 8
    with pytest.raises(SizeError):
        closure([left_shift(6), (1, 0, 2, 3, 4, 5)], cap=100)
    with pytest.raises(ParameterError):
        closure([(0, 1), (0, 1, 2)])
    with pytest.raises(ParameterError):
        closure([])


@pytest.mark.parametrize("kind", ["cyclic", "dihedral", "alternating", "symmetric"])
def test_closure_idempotent_and_group_axioms(kind):
    g = group_make(kind, 5)
    again = closure(list(g.elements), degree=5)
    assert again.elements == g.elements
    for p in g.elements:
        assert inverse(p) in g
        assert compose(p, inverse(p)) == identity(5)
    # validated constructor accepts it
    PermGroup(5, g.elements)


def test_permgroup_validation():
    with pytest.raises(ParameterError):
        PermGroup(3, frozenset({(1, 2, 0)}))  # no identity
    with pytest.raises(ParameterError):
        PermGroup(3, frozenset({(0, 1, 2), (1, 2, 0)}))  # not closed


def test_compose_order():
    p, q = (1, 2, 0), (1, 0, 2)
    # apply q first, then p
    assert compose(p, q) == tuple(p[q[i]] for i in range(3))


def test_permutation_text():
    assert parse_permutation("2 0 1") == (2, 0, 1)
    assert format_permutation((2, 0, 1)) == "2 0 1"
    for bad in ["", "0 0 1", "0 x", "1 2 3"]:
        with pytest.raises((FormatError, ParameterError)):
            parse_permutation(bad)


def test_orbit_examples():
    assert orbit(make_class("cmon", 5), group_make("cyclic", 5)) == [make_class("cmon", 5)]
    assert len(orbit(make_class("pmon", 3), group_make("cyclic", 3))) == 3
    assert len(orbit(make_class("complete", 4), group_make("symmetric", 4))) == 1
    with pytest.raises(ParameterError):
        orbit(make_class("pmon", 3), group_make("cyclic", 4))


def _brute_relabelings(h):
    m = h.order
    out = set()
    for p in itertools.permutations(range(m)):
        out.add(frozenset(tuple(sorted((p[u], p[v]))) for u, v in h.edges))
    return out


@pytest.mark.parametrize("cls,m", [("pmon", 4), ("palt", 5), ("ssc", 5), ("mnest", 4), ("cmon", 5)])
def test_symmetric_orbit_is_isomorphism_class(cls, m):
    h = make_class(cls, m)
    got = {frozenset(g.edges) for g in orbit(h, group_make("symmetric", m))}
    assert got == _brute_relabelings(h)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("kind", ["trivial", "cyclic", "reflective", "dihedral", "alternating", "symmetric"])
def test_orbit_size_divides_group_order(kind, m):
    g = group_make(kind, m)
    for cls in ["pmon", "palt", "ssc"]:
        h = make_class(cls, m)
        orb = orbit(h, g)
        assert h in orb
        assert len(g) % len(orb) == 0
    assert orbit(make_class("palt", m), group_make("trivial", m)) == [make_class("palt", m)]


def test_orbit_of_edgeless():
    assert orbit(OrderedGraph(4), group_make("symmetric", 4)) == [OrderedGraph(4)]
