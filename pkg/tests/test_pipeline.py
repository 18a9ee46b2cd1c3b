import json

import pytest

from boxclique import pipeline as P
from boxclique.classify import cq
from boxclique.core import Combination, is_clique, parse_combination, project
from boxclique.planar import FiveCycle


def test_co5_filter():
    co5 = P.build_Co5()
    assert len(co5) == 118
    assert len(P.build_Co5(max_deficit=None)) == 245
    assert all(P.skeleton_deficit(c.positions, c.sep()) <= P.CO5_MAX_DEFICIT for c in co5)


def test_cp5_ordered_and_unordered():
    co5 = P.build_Co5()
    ordered = P.build_Cp5(12, co5)
    unordered = P.build_Cp5(12, co5, ordered=False)
    assert len(ordered) == 384
    assert {frozenset(p) for p in ordered} == {frozenset(p) for p in unordered}


def test_mc_quadruples(mc12):
    assert len(mc12) == 372
    for q in mc12[::17]:
        assert q.l1.combination() + q.l2.combination() + q.l3 == q.lam.comb
        assert q.l3.size == 2


def test_flat_structure(flat12, mc12):
    assert len(flat12) == 96
    assert len(flat12.quadruples) == 352
    kinds = {}
    for blk in flat12:
        assert blk.members
        p0, p1 = blk.members[0].projections()
        assert p0 == blk.q.lam.comb and p1 == blk.qb.lam.comb
        kinds[p0] = kinds.get(p0, 0) + 1
    names = {P.named(n).comb: n for n in ("club", "spade", "diamond")}
    assert {names[k]: v for k, v in kinds.items()} == {"club": 16, "spade": 64, "diamond": 16}
    blk = next(iter(flat12))
    assert set(P.build_Fl(blk.q, blk.qb)) == set(blk.members)
    doc = blk.to_json()
    assert set(doc) == {"q", "qbar", "members"}


def test_flat_members_check(flat12):
    assert all(fq.check() for fq in flat12.quadruples[::7])


def test_flat13_empty(flat13):
    assert len(flat13) == 0 and flat13.quadruples == []


@pytest.mark.parametrize("suit,size", [("club", 64), ("spade", 256)])
def test_cq_three_ways(flat12, suit, size):
    table = P.assemble_Cq(suit, flat12, decompositions="table")
    every = P.assemble_Cq(suit, flat12, decompositions="all")
    direct = cq(suit)
    assert len(table) == len(every) == len(direct) == size
    assert [r.boxes for r in table] == [r.boxes for r in every] == sorted(direct)
    lam = P.named(suit).comb
    assert all(P.check_clique_record(r, lam) for r in every)


def test_assemble_rejects_unknown():
    with pytest.raises(ValueError):
        P.assemble_Cq("heart", [])
    with pytest.raises(ValueError):
        P.assemble_Cq("club", [], decompositions="some")


def test_direct_solver():
    club = P.named("club").comb
    sols = P.solve_profiles(club, club, club)
    assert len(sols) == 64
    for s in sols[:5]:
        fam = Combination(s)
        assert is_clique(list(s)) and all(project(fam, k) == club for k in range(3))
    assert P.solve_profiles(club, club, P.named("bar").comb) == []


def test_b3_certificate(flat13):
    cert = P.prove_b3(flat13)
    assert cert.ok
    assert cert.contradiction_14 == (91, 60)
    assert "certified" in cert.summary()


def test_bezrozw():
    r = P.check_bezrozw()
    assert r.ok and r.solutions == 0
    assert len(r.cycles) == 7 and len(r.listed) == 5
    missing = {FiveCycle.from_combination(c) for c in (
        parse_combination("[0,1]+[1,2]+[2,3]+[3,5]+[1,3]"),
        parse_combination("[1,3]+[3,4]+[4,5]+[5,6]+[3,5]"),
    )}
    assert set(r.unlisted) == missing


def test_marozw(marozw):
    assert marozw.ok
    assert marozw.triples == 22107
    assert marozw.eliminated_by_flat == 22103
    assert len(marozw.survivors) == 4 and len(marozw.solvable) == 2
    assert len(marozw.diamond_pairs) == 4 and marozw.listed_pair_found
    for g, d in marozw.diamond_pairs:
        assert g.combination() + d.combination() <= P.named("diamond").comb


def test_artifacts_deterministic(tmp_path):
    a = P.write_artifacts(tmp_path / "a", vs=(13,), log=lambda m: None)
    b = P.write_artifacts(tmp_path / "b", vs=(13,), log=lambda m: None)
    assert [(s["stage"], s["sha256"]) for s in a["stages"]] == [(s["stage"], s["sha256"]) for s in b["stages"]]
    counts = {s["stage"]: s["count"] for s in a["stages"]}
    assert counts == {"co5": 118, "cp5_13": 1135, "mc_13": 409, "flat_13": 0}
    doc = json.loads((tmp_path / "a" / "mc_13.json").read_text())
    assert doc["count"] == 409 and doc["params"] == {"v": 13}
