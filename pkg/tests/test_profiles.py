import csv
import io
from math import comb

import pytest

from boxclique.autgroup import aut_bruteforce
from boxclique.core import alpha, iv
from boxclique.compress import skeleton
from boxclique.pipeline import named
from boxclique.profiles import (
    ALPHA_CAP,
    Lhat,
    ProfileSystem,
    build_N,
    classify_type,
    enumerate_L,
    independent_blocks,
    profiles_csv,
    quotient_Lhat,
    table1,
    table2,
    type_decompositions,
    verify_edge_bound_typeII,
)


def test_saturated_tables():
    assert table1()[12] == [5, 19, 210, 164, 82, 13, 1]
    assert table2()[13] == [0, 0, 5, 8, 13, 5, 2]


def test_skeleton_mode_differs_only_at_small_s():
    sk = [len(enumerate_L(s, 12, "skeleton")) for s in range(3, 10)]
    assert sk == [5, 27, 210, 164, 82, 13, 1]
    assert [len(quotient_Lhat(s, 12, "skeleton")) for s in range(3, 10)] == [1, 8, 37, 29, 21, 5, 1]


@pytest.mark.parametrize("s", [4, 5, 6])
def test_profiles_solve_the_system(s):
    sk = skeleton(s)
    for p in enumerate_L(s, 12):
        assert p.v == 12
        assert alpha(p.comb, s) <= ALPHA_CAP
        assert all(p.comb.mult(x) >= 1 for x in sk.members)


def test_saturated_buckets_are_aut_closed():
    s = 5
    L = {p.comb for p in enumerate_L(s, 12)}
    for c in L:
        for g in aut_bruteforce(s):
            assert c.pushforward(g) in L


def test_lhat_is_union_of_quotients():
    assert len(Lhat(12)) == sum(table2()[12])


def test_arguments_validated():
    with pytest.raises(ValueError):
        enumerate_L(2, 12)
    with pytest.raises(ValueError):
        enumerate_L(4, 11)
    with pytest.raises(ValueError):
        enumerate_L(4, 12, "literal-ish")
    with pytest.raises(ValueError):
        ProfileSystem(10, 12)


@pytest.mark.parametrize("name,s,e,kind", [
    ("club", 4, 24, "I"), ("spade", 5, 26, "I"), ("diamond", 7, 19, "II"),
    ("star", 5, 22, "II"), ("bar", 9, 20, "I"),
])
def test_named_profiles(name, s, e, kind):
    p = named(name)
    assert (p.s, p.e, p.ptype, classify_type(p)) == (s, e, kind, kind)
    assert p.label() == (f"{e}'" if kind == "II" else str(e))


def test_type_decompositions_are_valid():
    lam = named("spade").comb
    decs = type_decompositions(lam)
    assert decs
    for b1, b2 in decs:
        assert b1.size == b2.size == 5
        assert not set(b1.support()) & set(b2.support())
        assert b1 + b2 <= lam
    assert all(b.size == 5 for b in independent_blocks(lam))


def test_type2_edge_bound():
    for v in (12, 13):
        rep = verify_edge_bound_typeII(v)
        assert rep.ok and rep.bound == comb(v, 2) / 3
    assert len(verify_edge_bound_typeII(12).equality) == 1


def test_N_sizes():
    assert len(build_N(12)) == 22107
    assert len(build_N(13)) == 57
    assert all(sum(p.e for p in t) >= 66 for t in build_N(12)[:500])


def test_csv_layout():
    text = profiles_csv(enumerate_L(4, 12)[:2], 4)
    head, *rows = list(csv.reader(io.StringIO(text)))
    assert head[0] == "n" and head[-1] == "e" and head[1] == repr(iv(0, 1))
    assert len(head) == 2 + 8
    assert len(rows) == 2 and sum(map(int, rows[0][1:-1])) == 12
