"""Adjacency matrices, automorphisms, combinatorial equivalence and chirality of 12-cliques."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .autgroup import GroupAction, orbits, product_group
from .core import Box, Interval, eps_code, eps_vector, is_clique
from .data import load_chirality, load_clique, load_digits, load_matrix

Perm = tuple[int, ...]
SIGMAS: tuple[Perm, ...] = tuple(itertools.permutations(range(3)))
SUIT_S = {"club": 4, "spade": 5}


def _members(clique) -> list[Box]:
    return list(clique.boxes) if hasattr(clique, "boxes") else list(clique)


# ---------------------------------------------------------------------------
# matrices

@dataclass(frozen=True)
class AdjMatrix:
    """Codes e1 + 2 e2 + 4 e3 of the eps-vectors; ``zero_pairs`` flags non-adjacent pairs."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def zero_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in range(i + 1, self.m) if not self.rows[i][j]]

    @property
    def is_clique(self) -> bool:
        return not self.zero_pairs

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    def vector(self, i: int, j: int) -> tuple[int, int, int]:
        c = self.rows[i][j]
        return (c & 1, c >> 1 & 1, c >> 2 & 1)

    def leq(self, other: "AdjMatrix") -> bool:
        """Componentwise order on eps-vectors."""
        return all(a & ~b == 0 for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def to_csv(self) -> str:
        return "\n".join(",".join(map(str, r)) for r in self.rows) + "\n"

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x}" for x in r) for r in self.rows)


def adjacency_matrix(clique) -> AdjMatrix:
    boxes = _members(clique)
    if any(len(b) != 3 for b in boxes):
        raise ValueError("adjacency matrices are defined for 3-boxes")
    m = len(boxes)
    return AdjMatrix(tuple(tuple(0 if i == j else eps_code(boxes[i], boxes[j]) for j in range(m))
                           for i in range(m)))


@dataclass(frozen=True)
class ProtoMatrix:
    """b_ij = number of k with eps_ik = eps_jk (the diagonal eps is taken as undefined)."""

    rows: tuple[tuple[int, ...], ...]


def proto_matrix(clique) -> ProtoMatrix:
    boxes = _members(clique)
    m = len(boxes)
    eps = [[None if i == j else eps_vector(boxes[i], boxes[j]) for j in range(m)] for i in range(m)]
    return ProtoMatrix(tuple(tuple(sum(eps[i][k] == eps[j][k] for k in range(m)) for j in range(m))
                             for i in range(m)))


def _fixing_perms(rows: Sequence[Sequence], rows2: Sequence[Sequence] | None = None, limit: int = 0) -> list[Perm]:
    """All pi with rows2[pi i][pi j] = rows[i][j], by backtracking on row-profile classes."""
    rows2 = rows if rows2 is None else rows2
    m = len(rows)
    if len(rows2) != m:
        return []
    prof = [tuple(sorted(r)) for r in rows]
    prof2 = [tuple(sorted(r)) for r in rows2]
    if sorted(prof) != sorted(prof2):
        return []
    cand = [[c for c in range(m) if prof2[c] == prof[i]] for i in range(m)]
    order = sorted(range(m), key=lambda i: (len(cand[i]), i))
    img = [-1] * m
    used = [False] * m
    out: list[Perm] = []

    def rec(k: int) -> bool:
        if k == m:
            out.append(tuple(img))
            return 0 < limit <= len(out)
        i = order[k]
        for c in cand[i]:
            if used[c] or rows2[c][c] != rows[i][i]:
                continue
            if all(rows2[c][img[j]] == rows[i][j] and rows2[img[j]][c] == rows[j][i] for j in order[:k]):
                img[i], used[c] = c, True
                if rec(k + 1):
                    return True
                img[i], used[c] = -1, False
        return False

    rec(0)
    return out


def protoautomorphisms(clique) -> list[Perm]:
    """Permutations pi (0-based images) with b_{pi i, pi j} = b_ij."""
    return _fixing_perms(proto_matrix(clique).rows)


# ---------------------------------------------------------------------------
# automorphisms and isomorphisms

@dataclass(frozen=True, order=True)
class IsoWitness:
    """A map of clique members i -> pi[i] with eps(pi i, pi j)[sigma[k]] = eps(i, j)[k]."""

    pi: Perm
    sigma: Perm

    def cycles(self) -> str:
        """1-based cycle notation of pi, fixed points omitted."""
        seen, parts = set(), []
        for i in range(len(self.pi)):
            if i in seen or self.pi[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.pi[j]
            parts.append("(" + ",".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"

    def order(self) -> int:
        return _perm_order(self.pi)


def _perm_order(p: Perm) -> int:
    k, q = 1, p
    ident = tuple(range(len(p)))
    while q != ident:
        q = tuple(p[x] for x in q)
        k += 1
    return k


def _permuted(rows: Sequence[Sequence[int]], sigma: Perm) -> list[list[int]]:
    """Codes with eps components relabelled: new[k] = old[sigma[k]]."""
    def tr(c):
        return sum(((c >> sigma[k]) & 1) << k for k in range(3))
    return [[tr(c) for c in r] for r in rows]


def _witnesses(a: AdjMatrix, b: AdjMatrix, limit: int = 0) -> list[IsoWitness]:
    out = []
    for sig in SIGMAS:
        for pi in _fixing_perms(a.rows, _permuted(b.rows, sig), limit):
            out.append(IsoWitness(pi, sig))
            if 0 < limit <= len(out):
                return out
    return out


def check_witness(c, d, w: IsoWitness) -> bool:
    """The eps-conjugation identity for a proposed witness."""
    a, b = adjacency_matrix(c), adjacency_matrix(d)
    m = a.m
    return all(tuple(b.vector(w.pi[i], w.pi[j])[w.sigma[k]] for k in range(3)) == a.vector(i, j)
               for i in range(m) for j in range(m) if i != j)


def automorphisms(clique) -> list[IsoWitness]:
    """All (pi, sigma) with the eps-conjugation identity, filtered from protoautomorphisms."""
    a = adjacency_matrix(clique)
    proto = set(protoautomorphisms(clique))
    out = sorted(_witnesses(a, a))
    if not {w.pi for w in out} <= proto:
        raise AssertionError("an automorphism is not a protoautomorphism")
    pis = {w.pi for w in out}
    if any(tuple(p[x] for x in q) not in pis for p in pis for q in pis):
        raise AssertionError("automorphisms are not closed under composition")
    return out


def automorphism_perms(clique) -> set[Perm]:
    return {w.pi for w in automorphisms(clique)}


def are_isomorphic(c, d) -> IsoWitness | None:
    """A witness that c is combinatorially equivalent to d, or None."""
    bc, bd = _members(c), _members(d)
    if len(bc) != len(bd):
        return None
    ws = _witnesses(adjacency_matrix(c), adjacency_matrix(d), limit=1)
    return ws[0] if ws else None


def generated_group(gens: Iterable[Perm]) -> set[Perm]:
    gens = [tuple(g) for g in gens]
    ident = tuple(range(len(gens[0])))
    group, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


@dataclass
class GroupSummary:
    """Checkable surrogates for the abstract structure of a permutation group."""

    order: int
    element_orders: dict[int, int]
    center: int


def group_summary(perms: Iterable[Perm]) -> GroupSummary:
    ps = list(perms)
    orders = dict(sorted(Counter(_perm_order(p) for p in ps).items()))
    center = sum(all(tuple(p[x] for x in q) == tuple(q[x] for x in p) for q in ps) for p in ps)
    return GroupSummary(len(ps), orders, center)


def equivalence_classes(cliques: Sequence, group: Sequence | None = None) -> list[list[int]]:
    """Partition into combinatorial-equivalence classes (indices into ``cliques``).

    When a group of box symmetries is given, its orbits are merged first; the
    class representatives are then compared pairwise.
    """
    fams = [tuple(sorted(_members(c))) for c in cliques]
    index = {f: i for i, f in enumerate(fams)}
    blocks: list[list[int]] = []
    if group is not None:
        act = GroupAction(group, lambda g, f: g.act_family(f), fams)
        for orb in orbits(act):
            blocks.append(sorted(index[f] for f in orb.members if f in index))
    else:
        blocks = [[i] for i in range(len(fams))]
    classes: list[list[int]] = []
    for blk in blocks:
        for cls in classes:
            if are_isomorphic(fams[blk[0]], fams[cls[0]]) is not None:
                cls.extend(blk)
                break
        else:
            classes.append(list(blk))
    return [sorted(c) for c in classes]


# ---------------------------------------------------------------------------
# the clique sets

@lru_cache(maxsize=None)
def cq(suit: str) -> tuple[tuple[Box, ...], ...]:
    """Cq for the suit as sorted box tuples (direct solution of the profile triple)."""
    from .pipeline import named, solve_profiles

    if suit not in SUIT_S:
        raise ValueError(f"unknown suit {suit!r}")
    lam = named(suit).comb
    return tuple(sorted(solve_profiles(lam, lam, lam)))


def group_orbits(suit: str, flavor: str) -> list:
    """Orbits of Cq(suit) under Aut3, A3, Iso3 or Iso3+ over I(s)."""
    fams = cq(suit)
    act = GroupAction(product_group(SUIT_S[suit], flavor), lambda g, f: g.act_family(f), fams)
    return orbits(act)


# ---------------------------------------------------------------------------
# digit labels and chirality

@dataclass(frozen=True)
class DigitLabel:
    digits: str

    @classmethod
    def of(cls, box: Box, suit: str) -> "DigitLabel":
        inv = {v: d for d, v in load_digits(suit).items()}
        return cls("".join(str(inv[x]) for x in box))

    def decode(self, suit: str) -> Box:
        tab = load_digits(suit)
        return Box(tab[int(c)] for c in self.digits)

    def __str__(self) -> str:
        return self.digits


def digit_labels(clique, suit: str) -> list[str]:
    return [str(DigitLabel.of(b, suit)) for b in _members(clique)]


def decode_labels(labels: Sequence[str], suit: str) -> list[Box]:
    return [DigitLabel(t).decode(suit) for t in labels]


@dataclass
class ChiralOrbit:
    representative: tuple
    length: int
    full_length: int
    full_index: int
    eq_class: int
    number: int = 0
    class_name: str = ""
    block_name: str = ""
    listed: tuple = ()

    @property
    def achiral(self) -> bool:
        return self.length == self.full_length


@dataclass
class ChiralityReport:
    suit: str
    orbits: list[ChiralOrbit]
    full_orbits: int
    fixture_ok: bool = True
    mismatches: list = field(default_factory=list)

    @property
    def lengths(self) -> list[int]:
        return [o.length for o in self.orbits]

    def table(self) -> str:
        """Rows in the layout number | class | iso-block | labels | length | flag.

        Matched rows keep the bundled numbering, names and representatives.
        """
        lines = []
        for o in self.orbits:
            labels = " ".join(o.listed or digit_labels(o.representative, self.suit))
            lines.append(f"{o.number:<2} | {o.class_name:<2} | {o.block_name} | {labels} | {o.length:<2} | "
                         f"{'achiral' if o.achiral else 'chiral'}")
        return "\n".join(lines) + "\n"


def chirality_report(suit: str, check_fixture: bool = True) -> ChiralityReport:
    """Iso3+ orbits of Cq(suit), the Iso3 orbits they fuse into, and per-orbit chirality.

    With ``check_fixture`` the bundled orbit table is matched row by row: the
    listed representative must lie in an orbit of the listed length, with the
    listed flag, and rows share a block exactly when their orbits fuse.
    """
    plus = group_orbits(suit, "Iso3+")
    full = group_orbits(suit, "Iso3")
    where_full = {f: k for k, o in enumerate(full) for f in o.members}
    classes = equivalence_classes(cq(suit), product_group(SUIT_S[suit], "A3"))
    fams = cq(suit)
    where_cls = {fams[i]: k for k, c in enumerate(classes) for i in c}
    rows = []
    blocks: dict[int, str] = {}
    for n, o in enumerate(plus, 1):
        k = where_full[o.representative]
        c = where_cls[o.representative]
        blk = blocks.setdefault(k, "abcdefghijklmnopqrstuvwxyz"[len(blocks)])
        rows.append(ChiralOrbit(o.representative, o.size, full[k].size, k, c, n, "I" * (c + 1), blk))
    rep = ChiralityReport(suit, rows, len(full))
    if check_fixture:
        _match_fixture(rep, plus)
    return rep


def _match_fixture(rep: ChiralityReport, plus) -> None:
    where = {f: k for k, o in enumerate(plus) for f in o.members}
    fixture = load_chirality(rep.suit)
    seen, block_of, class_of = set(), {}, {}
    for row in fixture:
        fam = tuple(sorted(decode_labels(row["labels"], rep.suit)))
        k = where.get(fam)
        if k is None:
            rep.mismatches.append((row["number"], "representative not in Cq"))
            continue
        if k in seen:
            rep.mismatches.append((row["number"], "orbit listed twice"))
        seen.add(k)
        o = rep.orbits[k]
        o.number, o.class_name, o.block_name = row["number"], row["class"], row["subblock"]
        o.listed = tuple(row["labels"])
        if o.length != row["length"]:
            rep.mismatches.append((row["number"], f"length {o.length}"))
        if o.achiral != row["achiral"]:
            rep.mismatches.append((row["number"], "chirality flag"))
        if block_of.setdefault(row["subblock"], o.full_index) != o.full_index:
            rep.mismatches.append((row["number"], "block does not fuse"))
        if class_of.setdefault(row["class"], o.eq_class) != o.eq_class:
            rep.mismatches.append((row["number"], "class"))
    if len(set(block_of.values())) != len(block_of) or len(set(class_of.values())) != len(class_of):
        rep.mismatches.append((0, "distinct blocks or classes coincide"))
    if len(seen) != len(rep.orbits):
        rep.mismatches.append((0, f"{len(rep.orbits) - len(seen)} orbits not listed"))
    rep.fixture_ok = not rep.mismatches
    if rep.fixture_ok:
        rep.orbits.sort(key=lambda o: o.number)


# ---------------------------------------------------------------------------
# compressible cliques

def _round_up(v: Interval) -> Interval:
    return Interval(v.lo + (v.lo & 1), v.hi + (v.hi & 1))


def compress_box(b: Box) -> Box:
    """Send every half-integer endpoint up to the next integer."""
    return Box(_round_up(x) for x in b)


@dataclass
class CompressibleReport:
    name: str
    is_clique: bool
    size: int
    matrix_matches: bool
    below: bool
    strictly_below: bool
    eps_1_8: tuple
    aut: GroupSummary
    compresses_onto: bool
    axis_maps_ok: bool

    @property
    def ok(self) -> bool:
        return (self.is_clique and self.size == 12 and self.matrix_matches and self.below
                and self.strictly_below and self.eps_1_8 == (0, 0, 1)
                and self.aut.order == 8 and self.aut.element_orders == DIH4
                and self.compresses_onto and self.axis_maps_ok)


DIH4 = {1: 1, 2: 5, 4: 2}


def _axis_map_ok(c: Sequence[Box], d: Sequence[Box]) -> bool:
    """Per axis, box-wise compression is a well defined map on intervals preserving adjacency."""
    from .core import adjacent

    for k in range(3):
        h: dict = {}
        for bc, bd in zip(c, d):
            if h.setdefault(bc[k], bd[k]) != bd[k]:
                return False
        if any(adjacent(x, y) and not adjacent(h[x], h[y]) for x in h for y in h):
            return False
    return True


def verify_compressible(name: str) -> CompressibleReport:
    """Check the compressible clique ``name`` (c1 or c2) against its incompressible partner."""
    c = load_clique(name)
    d = load_clique("d" + name[1:])
    ac, ad = adjacency_matrix(c), adjacency_matrix(d)
    golden = tuple(tuple(r) for r in load_matrix(name))
    aut = group_summary(automorphism_perms(c))
    return CompressibleReport(
        name=name,
        is_clique=is_clique(c),
        size=len(c),
        matrix_matches=ac.rows == golden,
        below=ac.leq(ad),
        strictly_below=ac.leq(ad) and ac != ad,
        eps_1_8=ac.vector(0, 7),
        aut=aut,
        compresses_onto=[compress_box(b) for b in c] == list(d),
        axis_maps_ok=_axis_map_ok(c, d),
    )


# ---------------------------------------------------------------------------
# exploratory search for compressible degenerations

@dataclass
class ExploreReport:
    found: dict[str, int]
    classes: list[tuple[str, AdjMatrix]]
    club_degenerations: int

    @property
    def total_types(self) -> int:
        return 3 + len(self.classes)


def _split_moves(fam: Sequence[Box]):
    """Move a shared endpoint by half a unit on a subset of the boxes carrying it."""
    for k in range(3):
        pts = sorted({p for b in fam for p in b[k]})
        for p in pts:
            carriers = [(i, side) for i, b in enumerate(fam) for side in (0, 1) if b[k][side] == p]
            for r in range(1, len(carriers)):
                for sub in itertools.combinations(carriers, r):
                    for delta in (-1, 1):
                        new = list(fam)
                        ok = True
                        for i, side in sub:
                            lo, hi = new[i][k]
                            lo, hi = (lo + delta, hi) if side == 0 else (lo, hi + delta)
                            if lo >= hi:
                                ok = False
                                break
                            new[i] = Box(new[i][:k] + (Interval(lo, hi),) + new[i][k + 1:])
                        if ok:
                            yield new


def explore_compressible(reps: dict[str, Sequence[Box]] | None = None) -> ExploreReport:
    """Single half-unit endpoint splits of the incompressible representatives.

    Every split that is still a clique with a strictly smaller adjacency matrix
    is kept; the survivors are sorted into equivalence classes.  This is a
    bounded search, not a proof that no other compressible types exist.
    """
    if reps is None:
        reps = {"club": list(cq("club")[0]), "d1": load_clique("d1"), "d2": load_clique("d2")}
    found: dict[str, int] = {}
    classes: list[tuple[str, AdjMatrix, list[Box]]] = []
    club = 0
    for name, fam in reps.items():
        ad = adjacency_matrix(fam)
        n = 0
        for new in _split_moves(list(fam)):
            if not is_clique(new):
                continue
            ac = adjacency_matrix(new)
            if ac == ad or not ac.leq(ad):
                continue
            n += 1
            if not any(are_isomorphic(new, other) for _, _, other in classes):
                classes.append((name, ac, new))
        found[name] = n
        if name == "club":
            club = n
    return ExploreReport(found, [(n, a) for n, a, _ in classes], club)
