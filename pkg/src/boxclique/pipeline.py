"""From profiles to maximum cliques in I^3: Co5, Cp5, Mc, Fl/Flat and Cq.

Pairs in Cp5 are ordered.  The cycle set Co5 keeps the five-cycles of I(9)
whose own skeleton deficit is at most 5 + 3: a cycle with a larger deficit
cannot be completed to a pair of deficit <= v - 10 <= 3 by a second cycle,
which covers at most five skeleton intervals.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .compress import is_incompressible, skeleton
from .core import (
    Box,
    Combination,
    adjacent,
    alpha_bruteforce,
    box_adjacent,
    in_interval_graph,
    interval_graph,
    is_clique,
    project,
)
from .data import load_clique, load_combination_list, load_decompositions, load_named_profiles
from .planar import FiveCycle, enumerate_5cycles, five_cycles_in, labeling_clique, labelings
from .profiles import Lhat, Profile, build_N, enumerate_L, type_decompositions

CO5_MAX_DEFICIT = 8
SUITS = {"club": "club", "spade": "spade", "♣": "club", "♠": "spade"}


def named(name: str) -> Profile:
    s, c = load_named_profiles()[name]
    return Profile(s, c)


# ---------------------------------------------------------------------------
# Step 1 and 2: cycles and pairs

def sep(cycle: FiveCycle) -> int:
    return cycle.sep()


def sep_bruteforce(cycle: FiveCycle) -> int:
    for s in range(1, 64):
        if all(in_interval_graph(x, s) for x in cycle.positions):
            return s
    raise ValueError("cycle lies in no I(s)")


def skeleton_deficit(vertices: Iterable, s: int) -> int:
    """|S(s) - vertices|."""
    return len(skeleton(s).members - set(vertices))


def build_Co5(max_deficit: int | None = CO5_MAX_DEFICIT) -> list[FiveCycle]:
    cyc = enumerate_5cycles(9)
    if max_deficit is None:
        return cyc
    return [c for c in cyc if skeleton_deficit(c.positions, c.sep()) <= max_deficit]


def build_Cp5(v: int, cycles: Sequence[FiveCycle] | None = None, ordered: bool = True):
    """Pairs (G, D) with |S(s) - (supp G u supp D)| <= v - 10, s = max(sep G, sep D)."""
    cycles = build_Co5() if cycles is None else list(cycles)
    out = []
    for i, g in enumerate(cycles):
        for j, d in enumerate(cycles):
            if not ordered and j < i:
                continue
            s = max(g.sep(), d.sep())
            if skeleton_deficit(g.positions + d.positions, s) <= v - 10:
                out.append((g, d))
    return out


# ---------------------------------------------------------------------------
# Step 3: decompositions of profiles

@dataclass(frozen=True, order=True)
class Quadruple:
    """lam = l1 + l2 + l3 with l1, l2 five-cycles and |l3| = v - 10."""

    l1: FiveCycle
    l2: FiveCycle
    l3: Combination = field(compare=False)
    lam: Profile = field(compare=False)
    key: tuple = field(default=(), repr=False)

    def to_json(self) -> dict:
        return {"lambda1": repr(self.l1.combination()), "lambda2": repr(self.l2.combination()),
                "lambda3": repr(self.l3), "lambda": repr(self.lam.comb), "s": self.lam.s}


def build_Mc(v: int, mode: str = "skeleton", cp5=None) -> list[Quadruple]:
    reps = Lhat(v, mode)
    pairs = build_Cp5(v) if cp5 is None else cp5
    out = []
    for ri, lam in enumerate(reps):
        for g, d in pairs:
            part = g.combination() + d.combination()
            if part <= lam.comb:
                out.append(Quadruple(g, d, lam.comb - part, lam, (ri, g, d)))
    out.sort(key=lambda q: q.key)
    return out


# ---------------------------------------------------------------------------
# Step 4: flat quadruples

@lru_cache(maxsize=None)
def _universe():
    vs = interval_graph(9)
    index = {x: i for i, x in enumerate(vs)}
    adj = [[1 if adjacent(x, y) else 0 for y in vs] for x in vs]
    return vs, index, adj


@dataclass(frozen=True, order=True)
class FlatQuadruple:
    """phi1, phi2 are 5-cliques in I^2 and phi = phi1 + phi2 + phi3 has alpha <= 2."""

    phi1: Combination
    phi2: Combination
    phi3: Combination

    @property
    def phi(self) -> Combination:
        return self.phi1 + self.phi2 + self.phi3

    def projections(self) -> tuple[Combination, Combination]:
        f = self.phi
        return project(f, 0), project(f, 1)

    def check(self) -> bool:
        return (is_clique(list(self.phi1.elements())) and is_clique(list(self.phi2.elements()))
                and len(self.phi1) == 5 and len(self.phi2) == 5
                and alpha_bruteforce(self.phi, box_adjacent) <= 2)

    def to_json(self) -> dict:
        return {"phi1": repr(self.phi1), "phi2": repr(self.phi2), "phi3": repr(self.phi3)}


def _flat_inputs(mc: Sequence[Quadruple]):
    vs, index, adj = _universe()
    cyc1 = [[index[x] for x in q.l1.positions] for q in mc]
    cyc2 = [[index[x] for x in q.l2.positions] for q in mc]
    rest = [[index[x] for x in q.l3.elements()] for q in mc]
    labs = [tuple(x - 1 for x in lab) for lab in labelings()]
    r = len(rest[0]) if rest else 0
    perms = list(itertools.permutations(range(r)))
    return adj, cyc1, cyc2, rest, labs, perms


def _decode(mc, hits, perms) -> dict[tuple[int, int], set[FlatQuadruple]]:
    labs = labelings()
    out: dict[tuple[int, int], set[FlatQuadruple]] = {}
    for q, qb, pi, l1, l2 in hits:
        a, b = mc[q], mc[qb]
        p1 = Combination(labeling_clique(a.l1, b.l1, labs[l1]))
        p2 = Combination(labeling_clique(a.l2, b.l2, labs[l2]))
        xs, ys = list(a.l3.elements()), list(b.l3.elements())
        p3 = Combination([Box((xs[k], ys[perms[pi][k]])) for k in range(len(xs))])
        out.setdefault((q, qb), set()).add(FlatQuadruple(p1, p2, p3))
    return out


@dataclass(frozen=True)
class FlatBlock:
    """A non-empty Fl(q, qb)."""

    q: Quadruple
    qb: Quadruple
    members: tuple[FlatQuadruple, ...]

    def to_json(self) -> dict:
        return {"q": self.q.to_json(), "qbar": self.qb.to_json(),
                "members": [fq.to_json() for fq in self.members]}


class Flat:
    """Flat(v) as the family of non-empty sets Fl(q, qb), (q, qb) in Mc(v)^2.

    ``len`` and iteration refer to the blocks; ``quadruples`` is their union.
    """

    def __init__(self, blocks: Iterable[FlatBlock]):
        self.blocks = sorted(blocks, key=lambda b: (b.q.key, b.qb.key))

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    @property
    def quadruples(self) -> list[FlatQuadruple]:
        return sorted({fq for b in self.blocks for fq in b.members})

    def __repr__(self) -> str:
        return f"Flat({len(self.blocks)} blocks, {len(self.quadruples)} quadruples)"


def _quadruples(flat) -> list[FlatQuadruple]:
    return flat.quadruples if isinstance(flat, Flat) else list(flat)


def build_Fl(q: Quadruple, qb: Quadruple, v: int | None = None) -> list[FlatQuadruple]:
    """Fl(q, qb): the flat quadruples projecting to q on axis one and qb on axis two."""
    mc = [q, qb]
    args = _flat_inputs(mc)
    hits = [h for h in kernels.flat_search(*args, q_lo=0, q_hi=1) if h[1] == 1]
    return sorted(_decode(mc, hits, args[5]).get((0, 1), ()))


def _flat_chunk(args):
    inputs, lo, hi = args
    return kernels.flat_search(*inputs, q_lo=lo, q_hi=hi)


def build_Flat(v: int, threads: int = 1, mc: Sequence[Quadruple] | None = None) -> Flat:
    """The non-empty Fl(q, qb) over Mc(v) x Mc(v)."""
    mc = build_Mc(v) if mc is None else list(mc)
    if not mc:
        return Flat([])
    inputs = _flat_inputs(mc)
    n = len(mc)
    if threads <= 1:
        hits = kernels.flat_search(*inputs)
    else:
        step = max(1, -(-n // (4 * threads)))
        tasks = [(inputs, lo, min(n, lo + step)) for lo in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=threads) as ex:
            hits = [h for part in ex.map(_flat_chunk, tasks) for h in part]
    blocks = _decode(mc, hits, inputs[5])
    return Flat(FlatBlock(mc[q], mc[qb], tuple(sorted(m))) for (q, qb), m in blocks.items())


# ---------------------------------------------------------------------------
# direct solver for a triple of profiles

def solve_profiles(g1: Combination, g2: Combination, g3: Combination, limit: int = 0) -> list[tuple[Box, ...]]:
    """All cliques (as sorted box tuples) with the three given projections."""
    if not (len(g1) == len(g2) == len(g3)):
        return []
    xs = list(g1.elements())
    n = len(xs)
    ys, zs = g2.support(), g3.support()
    pairs = [(y, z) for y in ys for z in zs]
    pair_y = [i for i in range(len(ys)) for _ in zs]
    pair_z = [j for _ in ys for j in range(len(zs))]
    pair_adj = [[adjacent(a[0], b[0]) or adjacent(a[1], b[1]) for b in pairs] for a in pairs]
    xadj = [[adjacent(a, b) for b in xs] for a in xs]
    prev_same = [i - 1 if i and xs[i - 1] == xs[i] else -1 for i in range(n)]
    sols = kernels.solve_triple(xadj, pair_adj, pair_y, pair_z,
                                [g2.mult(y) for y in ys], [g3.mult(z) for z in zs], prev_same, limit)
    return [tuple(sorted(Box((xs[i],) + pairs[a]) for i, a in enumerate(sol))) for sol in sols]


# ---------------------------------------------------------------------------
# Steps 5 and 6: lifting to I^3

@dataclass(frozen=True, order=True)
class CliqueRecord:
    boxes: tuple[Box, ...]
    profiles: tuple = field(compare=False, default=())
    provenance: tuple = field(compare=False, default=())

    def __len__(self) -> int:
        return len(self.boxes)

    def to_json(self) -> dict:
        return {"boxes": [repr(b) for b in self.boxes],
                "profiles": [repr(p) for p in self.profiles]}


def lift(fq: FlatQuadruple, betas: Sequence[Combination]) -> list[tuple[Box, ...]]:
    """Third coordinates: the boxes of phi^j take the intervals of beta^j bijectively.

    Two boxes whose planar parts do not touch need touching third coordinates;
    every other pair is adjacent already.
    """
    for part, beta in zip((fq.phi1, fq.phi2, fq.phi3), betas):
        if len(part) != len(beta):
            return []
    flat = list(fq.phi1.elements()) + list(fq.phi2.elements()) + list(fq.phi3.elements())
    owner = [0] * len(fq.phi1) + [1] * len(fq.phi2) + [2] * len(fq.phi3)
    zs = sorted({z for beta in betas for z in beta.support()})
    zadj = [[adjacent(x, y) for y in zs] for x in zs]
    budget = [[beta.mult(z) for z in zs] for beta in betas]
    n = len(flat)
    need = [[j for j in range(i) if not box_adjacent(flat[i], flat[j])] for i in range(n)]
    zi = [-1] * n
    out = set()

    def rec(i):
        if i == n:
            out.add(tuple(sorted(Box(tuple(flat[k]) + (zs[zi[k]],)) for k in range(n))))
            return
        g = budget[owner[i]]
        for c in range(len(zs)):
            if g[c] and all(zadj[c][zi[j]] for j in need[i]):
                g[c] -= 1
                zi[i] = c
                rec(i + 1)
                g[c] += 1
        zi[i] = -1

    rec(0)
    return sorted(out)


def _suit(suit: str) -> str:
    try:
        return SUITS[suit]
    except KeyError:
        raise ValueError(f"unknown suit {suit!r}") from None


def assemble_Cq(suit: str, flat: Flat | Sequence[FlatQuadruple] | None = None,
                decompositions: str = "all") -> list[CliqueRecord]:
    """Cq for the suit: lifts of the flat quadruples with phi_1 = lambda_suit.

    ``decompositions="table"`` uses only the bundled (beta1, beta2); ``"all"``
    uses every pair of disjoint independent blocks of mass five.
    """
    name = _suit(suit)
    lam = named(name).comb
    flat = _quadruples(build_Flat(12) if flat is None else flat)
    if decompositions == "table":
        decs = [load_decompositions()[name]]
    elif decompositions == "all":
        decs = type_decompositions(lam)
    else:
        raise ValueError("decompositions must be 'table' or 'all'")
    found: dict = {}
    for k, fq in enumerate(flat):
        p0, p1 = fq.projections()
        if p0 != lam or p1 != lam:
            continue
        for b1, b2 in decs:
            b3 = lam - b1 - b2
            for cl in lift(fq, (b1, b2, b3)):
                found.setdefault(cl, []).append(k)
    out = []
    for cl, prov in sorted(found.items()):
        fam = Combination(cl)
        profs = tuple(project(fam, k) for k in range(3))
        out.append(CliqueRecord(cl, profs, tuple(prov)))
    return out


def check_clique_record(rec: CliqueRecord, lam: Combination) -> bool:
    fam = Combination(rec.boxes)
    return (len(rec.boxes) == 12 and is_clique(list(rec.boxes))
            and all(project(fam, k) == lam for k in range(3))
            and all(is_incompressible(project(fam, k), max(x.hi for x in lam.support()) // 2 - 1)
                    for k in range(3)))


# ---------------------------------------------------------------------------
# certificates

@dataclass
class B3Certificate:
    lower_clique: list
    lower_ok: bool
    empty_high: bool
    l14: list
    bar_edges: int
    contradiction_14: tuple
    flat13: int

    @property
    def ok(self) -> bool:
        return (self.lower_ok and self.empty_high and len(self.l14) == 1
                and self.contradiction_14[0] > self.contradiction_14[1] and self.flat13 == 0)

    def summary(self) -> str:
        return (f"b3 >= 12: verified 12-clique {'yes' if self.lower_ok else 'NO'}\n"
                f"L(s,v) empty for v >= 15: {self.empty_high}\n"
                f"L(14) = {{bar}}: {len(self.l14) == 1}; C(14,2) = {self.contradiction_14[0]} > "
                f"3 e(bar) = {self.contradiction_14[1]}\n"
                f"|Flat(13)| = {self.flat13}\n"
                f"b3 = 12: {'certified' if self.ok else 'NOT certified'}")


def prove_b3(flat13: Sequence | None = None) -> B3Certificate:
    ex = load_clique("example1")
    lower_ok = len(ex) == 12 and is_clique(ex)
    empty_high = all(not enumerate_L(s, v, "skeleton") for v in (15, 16, 17) for s in range(3, 10))
    l14 = [p for s in range(3, 10) for p in enumerate_L(s, 14, "skeleton")]
    bar = named("bar")
    e = bar.e
    if [p.comb for p in l14] != [bar.comb]:
        l14 = l14 + [None]
    f13 = build_Flat(13) if flat13 is None else flat13
    return B3Certificate(ex, lower_ok, empty_high, l14, e, (comb(14, 2), 3 * e), len(f13))


@dataclass
class BezrozwReport:
    """``solutions`` decides the claim; the cycle lists are informational.

    ``cycles`` holds every five-cycle inside supp(star); ``listed`` the bundled
    list, which misses the cycles in ``unlisted``.
    """

    solutions: int
    cycles: list
    listed: list
    anticlique_independent: bool

    @property
    def unlisted(self) -> list:
        return [c for c in self.cycles if c not in self.listed]

    @property
    def listed_found(self) -> bool:
        return set(self.listed) <= set(self.cycles)

    @property
    def ok(self) -> bool:
        return self.solutions == 0 and self.listed_found and self.anticlique_independent


def check_bezrozw() -> BezrozwReport:
    """No clique has all three projections equal to the star profile (exhaustive search)."""
    star = named("star").comb
    sols = solve_profiles(star, star, star, limit=1)
    cyc = five_cycles_in(star)
    listed = sorted(FiveCycle.from_combination(c) for c in load_combination_list("star_cycles"))
    anti = [x for x in star.support() if repr(x) in ("[0,1]", "[3,4]", "[5,6]")]
    indep = len(anti) == 3 and all(not adjacent(a, b) for a, b in itertools.combinations(anti, 2))
    return BezrozwReport(len(sols), cyc, listed, indep)


@dataclass
class MarozwReport:
    triples: int
    all_type2: list
    eliminated_by_flat: int
    survivors: list
    solvable: list
    diamond_companions: list
    diamond_pairs: list
    listed_pair: tuple

    @property
    def listed_pair_found(self) -> bool:
        return self.listed_pair in {frozenset(p) for p in self.diamond_pairs}

    @property
    def ok(self) -> bool:
        club, spade = named("club").comb, named("spade").comb
        want = {(club,) * 3, (spade,) * 3}
        return ({tuple(p.comb for p in t) for t in self.solvable} == want and len(self.solvable) == 2
                and self.listed_pair_found)


def check_marozw(flat: Flat | Sequence[FlatQuadruple] | None = None, mode: str = "saturated") -> MarozwReport:
    """Exhaustive over N(12): only the club and spade triples admit a clique.

    A triple with a type I member gamma_k can be realized only if the other two
    profiles, in some order, are the projections of a flat quadruple; the
    remaining triples are decided by the direct solver.  ``diamond_pairs``
    lists the unordered pairs of five-cycles whose sum stays below the
    diamond profile; the bundled pair is one of them.
    """
    flat = _quadruples(build_Flat(12) if flat is None else flat)
    fp = {fq.projections() for fq in flat}
    N = build_N(12, mode)
    all2, survivors = [], []
    eliminated = 0
    for t in N:
        kinds = [p.ptype for p in t]
        if all(k == "II" for k in kinds):
            all2.append(t)
            survivors.append(t)
            continue
        dead = False
        for k in range(3):
            if kinds[k] != "I":
                continue
            a, b = [t[j].comb for j in range(3) if j != k]
            if (a, b) not in fp and (b, a) not in fp:
                dead = True
                break
        if dead:
            eliminated += 1
        else:
            survivors.append(t)
    solvable = [t for t in survivors if solve_profiles(t[0].comb, t[1].comb, t[2].comb, limit=1)]
    diamond = named("diamond")
    need = comb(12, 2) - 2 * diamond.e
    companions = [p for p in Lhat(12, mode) if p.e >= need]
    kc = frozenset(FiveCycle.from_combination(c) for c in load_combination_list("diamond_cycles"))
    found = five_cycles_in(diamond.comb)
    pairs = [(g, d) for g, d in itertools.combinations(found, 2)
             if g.combination() + d.combination() <= diamond.comb]
    return MarozwReport(len(N), all2, eliminated, survivors, solvable, companions, pairs, kc)


# ---------------------------------------------------------------------------
# artifacts

def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()


def write_artifacts(out_dir: str | Path, vs: Sequence[int] = (12, 13), threads: int = 1,
                    log=print) -> dict:
    """Run the stages and persist them as JSON with a manifest of counts and hashes."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {"schema": 1, "stages": []}

    def emit(name, params, items, serialize):
        t0 = time.perf_counter()
        data = [serialize(x) for x in items]
        payload = {"stage": name, "params": params, "count": len(data), "items": data}
        (out / f"{name}.json").write_text(json.dumps(payload, indent=1, sort_keys=True))
        manifest["stages"].append({"stage": name, "params": params, "count": len(data),
                                   "sha256": _digest(data), "wall_time": round(time.perf_counter() - t0, 3)})
        log(f"{name}: {len(data)}")

    def cyc_json(c):
        return repr(c.combination())

    t0 = time.perf_counter()
    co5 = build_Co5()
    emit("co5", {"max_deficit": CO5_MAX_DEFICIT}, co5, cyc_json)
    flats = {}
    for v in vs:
        cp = build_Cp5(v, co5)
        emit(f"cp5_{v}", {"v": v, "ordered": True}, cp, lambda p: [cyc_json(p[0]), cyc_json(p[1])])
        mc = build_Mc(v, cp5=cp)
        emit(f"mc_{v}", {"v": v}, mc, Quadruple.to_json)
        fl = build_Flat(v, threads=threads, mc=mc)
        flats[v] = fl
        emit(f"flat_{v}", {"v": v, "quadruples": len(fl.quadruples)}, fl, FlatBlock.to_json)
    if 12 in flats:
        for suit, fname in (("club", "cq_clubs"), ("spade", "cq_spades")):
            cq = assemble_Cq(suit, flats[12])
            emit(fname, {"suit": suit}, cq, CliqueRecord.to_json)
    manifest["total_wall_time"] = round(time.perf_counter() - t0, 3)
    (out / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True))
    return manifest
