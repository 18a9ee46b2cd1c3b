import json
from fractions import Fraction
from math import comb

import pytest

from boxclique.core import (
    Box,
    Combination,
    Interval,
    adjacent,
    alpha,
    alpha_bruteforce,
    box_adjacent,
    edge_count,
    eps_code,
    eps_families,
    eps_vector,
    graph_counts,
    in_interval_graph,
    interval_graph,
    is_clique,
    iv,
    level,
    omega,
    parse_box,
    parse_combination,
    parse_interval,
    project,
    units,
)
from boxclique.data import load_clique
from boxclique.pipeline import named


def test_interval_half_grid():
    x = iv(Fraction(1, 2), 2)
    assert x == Interval(1, 4)
    assert (x.left, x.right) == (Fraction(1, 2), 2)
    assert parse_interval(repr(x)) == x
    with pytest.raises(ValueError):
        Interval(3, 3)


def test_adjacency_is_touching():
    assert adjacent(iv(0, 1), iv(1, 3))
    assert adjacent(iv(1, 3), iv(0, 1))
    assert not adjacent(iv(0, 1), iv(0, 1))
    assert not adjacent(iv(0, 2), iv(1, 3))
    assert not adjacent(iv(0, 1), iv(2, 3))


def test_box_adjacency_and_eps():
    a = Box((iv(0, 1), iv(1, 2), iv(0, 2)))
    b = Box((iv(1, 2), iv(2, 3), iv(1, 3)))
    assert box_adjacent(a, b)
    assert eps_vector(a, b) == (1, 1, 0)
    assert eps_code(a, b) == 1 + 2
    assert parse_box(repr(a)) == a
    with pytest.raises(ValueError):
        box_adjacent(a, Box((iv(0, 1),)))


def test_interval_graph_sizes():
    for s in range(1, 10):
        vs = interval_graph(s)
        assert len(vs) == 2 + comb(s, 2)
        assert all(in_interval_graph(v, s) for v in vs)
        assert set(units(s)) <= set(vs)
        assert len(eps_families(s)) == 2 ** s


def test_combination_arithmetic():
    a = Combination({iv(0, 1): 2, iv(1, 2): 1})
    b = Combination([iv(0, 1)])
    assert (a - b).mult(iv(0, 1)) == 1
    assert a.size == 3 and len(a) == 3
    assert b <= a and not a <= b
    assert a + b - b == a
    with pytest.raises(ValueError):
        b - a
    assert Combination.from_json(json.loads(json.dumps(a.to_json()))) == a
    assert parse_combination(repr(a)) == a


def test_level_and_alpha_on_named_profiles():
    for name in ("club", "spade", "diamond", "star", "bar"):
        p = named(name)
        assert level(p.comb) == p.s
        assert alpha(p.comb, p.s) == alpha_bruteforce(p.comb) <= 5


def test_alpha_rejects_foreign_vertex():
    with pytest.raises(ValueError):
        alpha(Combination([iv(0, 2)]), 3)


def test_graph_counts_weighted():
    g = Combination({iv(0, 1): 2, iv(1, 2): 3})
    assert graph_counts(g) == (5, 6)
    assert omega(g) == 2


def test_projection_of_example_clique():
    ex = load_clique("example1")
    assert len(ex) == 12 and is_clique(ex)
    fam = Combination(ex)
    for k in range(3):
        assert project(fam, k).size == 12
    assert project(fam, (0, 2)).size == 12
    with pytest.raises(IndexError):
        project(fam, 3)
    assert edge_count(fam, box_adjacent) == comb(12, 2)
