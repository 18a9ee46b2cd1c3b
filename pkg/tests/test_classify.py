import random

import pytest

from boxclique import classify as C
from boxclique.autgroup import product_group
from boxclique.core import Box, is_clique, iv
from boxclique.data import load_automorphisms, load_clique, load_matrix


@pytest.mark.parametrize("name", ["d1", "d2", "c1", "c2"])
def test_adjacency_matrices(name):
    a = C.adjacency_matrix(load_clique(name))
    assert a.rows == tuple(map(tuple, load_matrix(name)))
    assert a.is_clique and a.m == 12
    assert all(a[i, j] == a[j, i] for i in range(12) for j in range(12))
    assert a.to_csv().count("\n") == 12


def test_adjacency_rejects_2_boxes():
    with pytest.raises(ValueError):
        C.adjacency_matrix([Box((iv(0, 1), iv(1, 2)))])


def test_compressible_below_incompressible():
    for k in (1, 2):
        ac = C.adjacency_matrix(load_clique(f"c{k}"))
        ad = C.adjacency_matrix(load_clique(f"d{k}"))
        assert ac.leq(ad) and not ad.leq(ac)
        assert ac.vector(0, 7) == (0, 0, 1)


@pytest.mark.parametrize("name", ["d1", "d2"])
def test_automorphisms_match_bundled_lists(name):
    cl = load_clique(name)
    assert C.automorphism_perms(cl) == set(load_automorphisms(name))
    assert len(C.protoautomorphisms(cl)) == 48


def test_group_structure():
    d1 = C.group_summary(C.automorphism_perms(load_clique("d1")))
    d2 = C.group_summary(C.automorphism_perms(load_clique("d2")))
    ex = C.group_summary(C.automorphism_perms(load_clique("example1")))
    assert (d1.order, d1.element_orders, d1.center) == (24, {1: 1, 2: 9, 3: 2, 4: 6, 6: 6}, 2)
    assert (d2.order, d2.element_orders, d2.center) == (24, {1: 1, 2: 5, 3: 2, 4: 2, 6: 10, 12: 4}, 6)
    assert (ex.order, ex.element_orders) == (48, {1: 1, 2: 7, 3: 8, 4: 24, 6: 8})


def test_example_generators():
    cl = load_clique("example1")
    assert C.automorphism_perms(cl) == C.generated_group(load_automorphisms("example1"))
    assert len(C.protoautomorphisms(cl)) == 3072


def test_witness_identity():
    d1 = load_clique("d1")
    for w in C.automorphisms(d1)[:8]:
        assert C.check_witness(d1, d1, w)
        assert w.order() >= 1 and w.cycles().startswith("(")


def test_isomorphism_is_invariant_under_relabelling():
    d2 = load_clique("d2")
    rng = random.Random(5)
    for g in rng.sample(product_group(5, "A3"), 4):
        img = list(g.act_family(d2))
        rng.shuffle(img)
        w = C.are_isomorphic(d2, img)
        assert w is not None and C.check_witness(d2, img, w)
    assert C.are_isomorphic(load_clique("d1"), d2) is None
    assert C.are_isomorphic(d2, d2[:11]) is None


def test_cq_sets():
    assert len(C.cq("club")) == 64 and len(C.cq("spade")) == 256
    assert all(is_clique(list(f)) for f in C.cq("club"))
    with pytest.raises(ValueError):
        C.cq("heart")


def test_orbits_and_classes():
    assert [o.size for o in C.group_orbits("club", "A3")] == [64]
    assert sorted(o.size for o in C.group_orbits("spade", "A3")) == [128, 128]
    cls = C.equivalence_classes(C.cq("spade"), product_group(5, "A3"))
    assert sorted(map(len, cls)) == [128, 128]
    reps = [C.cq("spade")[c[0]] for c in cls]
    d = {n: load_clique(n) for n in ("d1", "d2")}
    hits = {n for n in d for r in reps if C.are_isomorphic(r, d[n])}
    assert hits == {"d1", "d2"}


def test_equivalence_classes_without_group():
    fams = [load_clique("d1"), load_clique("d2"), load_clique("d1")[::-1]]
    assert C.equivalence_classes(fams) == [[0, 2], [1]]


@pytest.mark.parametrize("suit", ["club", "spade"])
def test_digit_labels_roundtrip(suit):
    for fam in C.cq(suit)[:10]:
        labels = C.digit_labels(fam, suit)
        assert sorted(C.decode_labels(labels, suit)) == sorted(fam)


def test_chirality_club():
    rep = C.chirality_report("club")
    assert rep.fixture_ok, rep.mismatches
    assert sorted(rep.lengths) == [8, 8, 24, 24]
    assert rep.full_orbits == 2
    assert not any(o.achiral for o in rep.orbits)
    assert len(rep.table().splitlines()) == 4


def test_chirality_spade():
    rep = C.chirality_report("spade")
    assert rep.fixture_ok, rep.mismatches
    assert rep.lengths == [12] * 6 + [24, 24, 4, 4] + [24] * 5 + [8]
    assert [o.number for o in rep.orbits if o.achiral] == [15, 16]
    assert "achiral" in rep.table()


def test_chirality_without_fixture():
    rep = C.chirality_report("club", check_fixture=False)
    assert sorted(rep.lengths) == [8, 8, 24, 24]
    assert [o.number for o in rep.orbits] == [1, 2, 3, 4]


def test_compress_box():
    assert C.compress_box(Box((iv(0, 1), iv(1, 2), iv(2, 3)))) == Box((iv(0, 1), iv(1, 2), iv(2, 3)))
    assert C.compress_box(Box((iv(0.5, 2), iv(1, 1.5), iv(0, 1)))) == Box((iv(1, 2), iv(1, 2), iv(0, 1)))


@pytest.mark.parametrize("name", ["c1", "c2"])
def test_verify_compressible(name):
    r = C.verify_compressible(name)
    assert r.ok
    assert r.aut.element_orders == C.DIH4


def test_explore_compressible_small():
    rep = C.explore_compressible({"d1": load_clique("d1")})
    assert rep.found == {"d1": 12}
    assert rep.classes and all(name == "d1" for name, _ in rep.classes)
