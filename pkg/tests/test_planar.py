import pytest

from boxclique.core import Combination, iv, project
from boxclique.pipeline import sep, sep_bruteforce
from boxclique.planar import (
    FiveCycle,
    cliques_of_size,
    decompose_2d_clique,
    derive_labelings,
    enumerate_5cycles,
    five_cycles_in,
    is_five_cycle_graph,
    isometry_classes_2d,
    labeling_clique,
    labelings,
    max_clique_2d,
    solve_construction_2d,
)


def test_labelings_rederived():
    assert len(labelings()) == 10
    assert sorted(derive_labelings()) == sorted(labelings())


def test_b2():
    assert max_clique_2d(3) == 5
    assert cliques_of_size(6, 3) == []
    assert len(cliques_of_size(5, 3)) == 10


def test_construction_problem():
    (g,) = enumerate_5cycles(3)
    sols = solve_construction_2d(g, g)
    assert [lab for lab, _ in sols] == labelings()
    for lab, boxes in sols:
        assert boxes == labeling_clique(g, g, lab)
        d = decompose_2d_clique(boxes)
        assert d.cycles == (g, g)


def test_cycle_counts():
    assert [len(enumerate_5cycles(s)) for s in range(1, 10)] == [0, 0, 1, 4, 12, 30, 66, 132, 245]
    with pytest.raises(ValueError):
        enumerate_5cycles(10)


def test_sep_closed_form():
    for c in enumerate_5cycles(9):
        assert sep(c) == sep_bruteforce(c)
        assert is_five_cycle_graph(c.positions)


def test_five_cycle_roundtrip():
    c = FiveCycle.from_points(0, 1, 2, 3, 4)
    assert c.positions[-1] == iv(1, 3)
    assert FiveCycle.from_combination(c.combination()) == c
    with pytest.raises(ValueError):
        FiveCycle.from_combination([iv(0, 1)] * 5)
    with pytest.raises(ValueError):
        FiveCycle((0, 2, 2, 4, 6))


def test_cycles_in_profile():
    c = FiveCycle.from_points(0, 1, 2, 3, 4)
    assert five_cycles_in(c.combination()) == [c]
    assert five_cycles_in(Combination([iv(0, 1), iv(1, 2)])) == []


def test_isometry_classes_partition():
    cls = isometry_classes_2d(cliques_of_size(5, 3), 3)
    assert sorted(i for c in cls for i in c) == list(range(10))
    assert sorted(map(len, cls)) == [2, 8]


def test_projections_of_2d_cliques_are_the_cycle():
    (g,) = enumerate_5cycles(3)
    for cl in cliques_of_size(5, 3):
        fam = Combination(cl)
        assert project(fam, 0) == project(fam, 1) == g.combination()
