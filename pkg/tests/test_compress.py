import pytest

from boxclique.compress import (
    B_KNOWN,
    check_bounds_suite,
    compression_level,
    find_homomorphism,
    is_incompressible,
    normalize,
    product_clique,
    skeleton,
)
from boxclique.core import Box, Combination, adjacent, interval_graph, is_clique, iv
from boxclique.data import load_clique
from boxclique.pipeline import named
from boxclique.planar import cliques_of_size


def test_skeleton():
    sk = skeleton(5)
    assert len(sk) == 6 + 2
    assert iv(1, 3) in sk and iv(3, 5) in sk and iv(2, 4) not in sk
    with pytest.raises(ValueError):
        skeleton(2)


def test_identity_is_a_homomorphism():
    for s in range(1, 6):
        h = find_homomorphism(interval_graph(s), s)
        assert h is not None
        assert all(adjacent(h[x], h[y]) for x in h for y in h if adjacent(x, y))


def test_no_homomorphism_down_from_I_s():
    assert find_homomorphism(interval_graph(2), 1) is not None  # a path folds onto an edge
    for s in range(3, 7):
        assert find_homomorphism(interval_graph(s), s - 1) is None


def test_named_profiles_are_incompressible():
    for name in ("club", "spade", "diamond", "star", "bar"):
        p = named(name)
        assert is_incompressible(p.comb, p.s)
        assert compression_level(p.comb.support()) == p.s


def test_compressible_family():
    fam = [iv(0, 1), iv(0, 2)]
    assert normalize(fam).s == 0
    assert not is_incompressible(Combination([iv(1, 2), iv(2, 3)]), 3)
    with pytest.raises(ValueError):
        is_incompressible(Combination([iv(0, 3)]), 3)
    with pytest.raises(ValueError):
        normalize([])


def test_bounds_suite_on_known_cliques():
    ex = load_clique("example1")
    c2 = cliques_of_size(5, 3)[0]
    c1 = [Box((iv(0, 1),)), Box((iv(1, 2),))]
    prod = product_clique(c1, c2)
    assert len(prod) == 10 and is_clique(prod)
    assert B_KNOWN == {1: 2, 2: 5, 3: 12}
    assert check_bounds_suite(cliques=[ex, c2, c1, prod]) == []


def test_bounds_suite_reports_violations():
    not_clique = [Box((iv(0, 1),)), Box((iv(2, 3),))]
    assert check_bounds_suite(cliques=[not_clique]) == [f"not a clique: {not_clique!r}"]
    fam = [iv(0, 1), iv(1, 2), iv(2, 3), iv(3, 4), iv(1, 3)]
    assert check_bounds_suite(combos=[Combination(fam)], families=[fam]) == []
