import itertools

import pytest

from boxclique.autgroup import (
    FLAVORS,
    GroupAction,
    aut_bruteforce,
    aut_closed_form,
    aut_interval_graph,
    canonical_profile,
    degree_formula,
    degree_profile,
    element_order_profile,
    identity,
    orbits,
    product_group,
    reflection,
)
from boxclique.core import Box, interval_graph, iv
from boxclique.pipeline import named


@pytest.mark.parametrize("s,order", [(1, 2), (2, 2), (3, 10), (4, 8), (9, 8)])
def test_aut_orders(s, order):
    assert len(aut_bruteforce(s)) == order


def test_aut_is_a_group_of_automorphisms():
    for s in (3, 5, 7):
        G = set(aut_bruteforce(s))
        assert all(g.preserves_adjacency() for g in G)
        assert all(g * h in G for g in G for h in G)
        assert identity(s) in G and reflection(s) in G


def test_closed_form_matches_bruteforce():
    for s in range(4, 10):
        assert set(aut_closed_form(s)) == set(aut_bruteforce(s))
        assert len(set(aut_interval_graph(s))) == 8
    with pytest.raises(ValueError):
        aut_closed_form(3)


def test_aut_is_dihedral_of_order_8():
    assert element_order_profile(aut_bruteforce(6)) == {1: 1, 2: 5, 4: 2}


def test_degree_formula():
    for s in range(4, 10):
        prof = degree_profile(s)
        assert all(degree_formula(v, s) == d for v, d in prof.items())


def test_reflection():
    h = reflection(4)
    assert h(iv(0, 1)) == iv(4, 5) and h(iv(1, 3)) == iv(2, 4)
    assert (h * h).is_identity() and h.order() == 2


@pytest.mark.parametrize("flavor,size", [("Aut3", 512), ("A3", 3072), ("Iso3", 48), ("Iso3+", 24)])
def test_product_group_sizes(flavor, size):
    G = product_group(5, flavor)
    assert len(G) == size
    assert flavor in FLAVORS


def test_product_group_composition():
    G = product_group(4, "Iso3")
    b = Box((iv(0, 1), iv(1, 3), iv(2, 3)))
    for g, h in itertools.product(G[:12], G[-12:]):
        assert (g * h)(b) == g(h(b))


def test_orientation_splits_iso3():
    G = product_group(4, "Iso3")
    assert sorted(g.orientation() for g in G).count(1) == 24
    with pytest.raises(ValueError):
        product_group(3, "A3")
    with pytest.raises(ValueError):
        product_group(4, "nope")


def test_orbits_on_vertices():
    s = 5
    act = GroupAction(aut_bruteforce(s), lambda g, v: g(v), interval_graph(s))
    orbs = orbits(act)
    assert sum(o.size for o in orbs) == len(interval_graph(s))
    assert all(o.size * o.stabilizer_order == 8 for o in orbs)


def test_canonical_profile_is_orbit_invariant():
    p = named("spade")
    c = canonical_profile(p.comb, p.s)
    for g in aut_bruteforce(p.s):
        assert canonical_profile(p.comb.pushforward(g), p.s) == c
