"""Homomorphisms of one-dimensional interval graphs and compression levels."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .core import (
    Box,
    Combination,
    Interval,
    adjacent,
    alpha_bruteforce,
    interval_graph,
    is_clique,
    iv,
    level,
)


def interval_graph0(s: int) -> tuple[Interval, ...]:
    """Vertices of I(s), allowing s = 0 where I(0) = {[0,1]}."""
    return (iv(0, 1),) if s == 0 else interval_graph(s)


@dataclass(frozen=True)
class CompressionResult:
    s: int
    image: Mapping[Interval, Interval] = field(repr=False)

    def image_family(self) -> frozenset:
        return frozenset(self.image.values())


@dataclass(frozen=True)
class Skeleton:
    s: int
    members: frozenset

    def __contains__(self, v) -> bool:
        return v in self.members

    def __len__(self) -> int:
        return len(self.members)


def skeleton(s: int) -> Skeleton:
    """S(s): the unit intervals of I(s) together with [1,3] and [s-2,s]."""
    if s < 3:
        raise ValueError("the skeleton is defined for s >= 3")
    mem = {iv(i, i + 1) for i in range(s + 1)} | {iv(1, 3), iv(s - 2, s)}
    return Skeleton(s, frozenset(mem))


# ---------------------------------------------------------------------------
# homomorphism search

def find_homomorphism(vertices: Sequence[Interval], s: int) -> dict | None:
    """Some graph homomorphism from the family into I(s), or None.

    Forward-checking backtracking over bitmask domains; adjacency in the source
    must map to adjacency in the target, nothing else is required.
    """
    src = sorted(set(vertices))
    if not src:
        return {}
    tgt = interval_graph0(s)
    nt = len(tgt)
    tnb = [0] * nt
    for a in range(nt):
        for b in range(nt):
            if a != b and adjacent(tgt[a], tgt[b]):
                tnb[a] |= 1 << b
    n = len(src)
    nb = [[j for j in range(n) if j != i and adjacent(src[i], src[j])] for i in range(n)]
    full = (1 << nt) - 1
    val = [-1] * n

    def rec(dom: list) -> bool:
        best, bc = -1, nt + 1
        for i in range(n):
            if val[i] < 0:
                c = bin(dom[i]).count("1")
                if c < bc:
                    best, bc = i, c
        if best < 0:
            return True
        i = best
        d = dom[i]
        while d:
            low = d & -d
            a = low.bit_length() - 1
            d ^= low
            nd = list(dom)
            ok = True
            for j in nb[i]:
                if val[j] < 0:
                    nd[j] &= tnb[a]
                    if not nd[j]:
                        ok = False
                        break
            if ok:
                val[i] = a
                if rec(nd):
                    return True
                val[i] = -1
        return False

    # vertices with neighbours cannot go to an isolated target (only s=0)
    if not rec([full] * n):
        return None
    return {src[i]: tgt[val[i]] for i in range(n)}


def _embed(family: Iterable[Interval]) -> tuple[int, dict]:
    """Rank-compress endpoints to 1..m, giving an isomorphic copy inside I(m)."""
    fam = sorted(set(family))
    pts = sorted({p for v in fam for p in v})
    rank = {p: i + 1 for i, p in enumerate(pts)}
    img = {v: iv(rank[v.lo], rank[v.hi]) for v in fam}
    return max(1, len(pts)), img


def _drop_first_unit(v: Interval) -> Interval:
    a, b = v.lo // 2, v.hi // 2
    if a in (0, 1) and b > 2:
        return iv(1, b - 1)
    return iv(a - 1, b - 1)


def _drop_unit(v: Interval, i: int) -> Interval:
    a, b = v.lo // 2, v.hi // 2
    if b <= i:
        return v
    if a <= i:
        return iv(a, b - 1)
    return iv(a - 1, b - 1)


def _reflect(v: Interval, s: int) -> Interval:
    return iv(s + 1 - v.hi // 2, s + 1 - v.lo // 2)


def reduce_by_moves(image: dict, s: int) -> tuple[int, dict]:
    """Apply the unit-deletion moves until every [i,i+1], 0 <= i <= s, is hit."""
    while s >= 1:
        present = set(image.values())
        missing = [i for i in range(s + 1) if iv(i, i + 1) not in present]
        if not missing:
            break
        i = missing[0]
        if i == 0:
            g = _drop_first_unit
        elif i == s:
            g = lambda v, s=s: _reflect(_drop_first_unit(_reflect(v, s)), s - 1)
        else:
            g = lambda v, i=i: _drop_unit(v, i)
        image = {k: g(v) for k, v in image.items()}
        s -= 1
    return s, image


def normalize(family: Iterable[Interval]) -> CompressionResult:
    """Minimal level s(F) with an explicit homomorphism F -> I(s)."""
    fam = sorted(set(family))
    if not fam:
        raise ValueError("empty family")
    s, img = _embed(fam)
    s, img = reduce_by_moves(img, s)
    while s >= 1:
        # search from the family itself: the current image may carry extra adjacencies
        h = find_homomorphism(fam, s - 1)
        if h is None:
            break
        img = h
        s -= 1
        s, img = reduce_by_moves(img, s)
    return CompressionResult(s, img)


def compression_level(family: Iterable[Interval]) -> int:
    return normalize(family).s


def is_incompressible(gamma: Combination | Iterable[Interval], s: int) -> bool:
    """True iff supp gamma lies in I(s) and admits no homomorphism into I(s-1)."""
    sup = gamma.support() if isinstance(gamma, Combination) else tuple(set(gamma))
    verts = set(interval_graph0(s))
    bad = [v for v in sup if v not in verts]
    if bad:
        raise ValueError(f"{bad[0]!r} is not a vertex of I({s})")
    if s == 0:
        return bool(sup)
    sset = set(sup)
    if any(iv(i, i + 1) not in sset for i in range(s + 1)):
        return False
    if s >= 3 and not skeleton(s).members <= sset:
        return False
    return find_homomorphism(sup, s - 1) is None


# ---------------------------------------------------------------------------
# the bound suite

B_KNOWN = {1: 2, 2: 5, 3: 12}


def product_clique(c: Sequence[Box], d: Sequence[Box]) -> list[Box]:
    """{I x J}: a clique in dimension k+l built from cliques in k and l."""
    return [Box(tuple(a) + tuple(b)) for a in c for b in d]


def check_bounds_suite(combos: Iterable[Combination] = (), families: Iterable[Sequence[Interval]] = (),
                       cliques: Iterable[Sequence[Box]] = ()) -> list[str]:
    """Check the section-two inequalities on samples; return a list of violations."""
    bad = []
    for g in combos:
        a = alpha_bruteforce(g)
        if a > 1 and g.size > 4 * a - 3:
            bad.append(f"|gamma| <= 4 alpha - 3 fails for {g!r}")
        try:
            s = level(g)
        except ValueError:
            s = None
        if s is not None and is_incompressible(g, s) and s > 2 * a - 1:
            bad.append(f"s <= 2 alpha - 1 fails for {g!r}")
    for fam in families:
        fam = sorted(set(fam))
        res = normalize(fam)
        a = alpha_bruteforce(Combination(fam))
        if a < res.s // 2 + 1:
            bad.append(f"alpha >= floor(s/2)+1 fails for {fam!r}")
        img = res.image_family()
        if res.s >= 1 and any(iv(i, i + 1) not in img for i in range(res.s + 1)):
            bad.append(f"unit intervals missing from normal form of {fam!r}")
        if res.s >= 3 and not {iv(1, 3), iv(res.s - 2, res.s)} <= img:
            bad.append(f"[1,3] or [s-2,s] missing from normal form of {fam!r}")
    for c in cliques:
        c = list(c)
        if not is_clique(c):
            bad.append(f"not a clique: {c!r}")
        n = len(c[0]) if c else 0
        if n in B_KNOWN and len(c) > B_KNOWN[n]:
            bad.append(f"clique of size {len(c)} exceeds b_{n}")
    for n in range(2, max(B_KNOWN) + 1):
        if B_KNOWN[n] > 4 * B_KNOWN[n - 1] - 3:
            bad.append(f"b_{n} <= 4 b_{n-1} - 3 fails")
    for k in B_KNOWN:
        for l in B_KNOWN:
            if k + l in B_KNOWN and B_KNOWN[k] * B_KNOWN[l] > B_KNOWN[k + l]:
                bad.append(f"b_{k} b_{l} <= b_{k+l} fails")
    return bad
