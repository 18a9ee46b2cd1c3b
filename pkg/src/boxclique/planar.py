"""Five-cycles in I^1, five-cliques in I^2 and the ten labelings."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import (
    Box,
    Combination,
    Interval,
    adjacent,
    box_adjacent,
    in_interval_graph,
    interval_graph,
    is_clique,
    iv,
    omega,
    project,
)
from .data import load_labelings


@dataclass(frozen=True, order=True)
class FiveCycle:
    """Breakpoints a0 < ... < a4 on the half-grid; intervals [a_k, a_k+1] and [a1, a3].

    ``positions`` lists the five intervals in cycle order
    [a0,a1], [a1,a2], [a2,a3], [a3,a4], [a1,a3].
    """

    a: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.a) != 5 or any(x >= y for x, y in zip(self.a, self.a[1:])):
            raise ValueError(f"breakpoints must increase: {self.a}")

    @classmethod
    def from_points(cls, *pts) -> "FiveCycle":
        """Build from real breakpoints, e.g. ``FiveCycle.from_points(0, 1, 2, 3, 4)``."""
        return cls(tuple(iv(p, p + 1).lo for p in pts))

    @property
    def positions(self) -> tuple[Interval, ...]:
        a = self.a
        return (Interval(a[0], a[1]), Interval(a[1], a[2]), Interval(a[2], a[3]),
                Interval(a[3], a[4]), Interval(a[1], a[3]))

    def combination(self) -> Combination:
        return Combination(self.positions)

    @classmethod
    def from_combination(cls, gamma: Combination | Sequence[Interval]) -> "FiveCycle":
        """The unique cycle whose intervals sum to ``gamma``."""
        ivs = sorted(gamma.elements()) if isinstance(gamma, Combination) else sorted(gamma)
        if len(ivs) != 5 or len(set(ivs)) != 5:
            raise ValueError("a five-cycle has five distinct intervals")
        pts = sorted({p for v in ivs for p in v})
        if len(pts) != 5:
            raise ValueError("not a five-cycle: wrong number of endpoints")
        cyc = cls(tuple(pts))
        if sorted(cyc.positions) != ivs:
            raise ValueError("not a five-cycle")
        return cyc

    def sep(self) -> int:
        """Smallest s with every interval in I(s): a3 if a4 = a3 + 1, else a4."""
        a = [x // 2 for x in self.a]
        return a[3] if a[4] == a[3] + 1 else a[4]

    def __repr__(self) -> str:
        return "FiveCycle(" + "+".join(map(repr, self.positions)) + ")"


def is_five_cycle_graph(vertices: Sequence[Interval]) -> bool:
    """True iff the five distinct intervals induce a 5-cycle."""
    vs = list(vertices)
    if len(vs) != 5 or len(set(vs)) != 5:
        return False
    deg = [sum(adjacent(x, y) for y in vs if y != x) for x in vs]
    if deg != [2] * 5:
        return False
    seen, stack = {0}, [0]
    while stack:
        i = stack.pop()
        for j in range(5):
            if j not in seen and adjacent(vs[i], vs[j]):
                seen.add(j)
                stack.append(j)
    return len(seen) == 5


@lru_cache(maxsize=None)
def _cycles(s: int) -> tuple[FiveCycle, ...]:
    if s < 1:
        return ()
    pts = range(0, s + 2)
    out = []
    for a in itertools.combinations(pts, 5):
        c = FiveCycle(tuple(2 * x for x in a))
        if all(in_interval_graph(v, s) for v in c.positions):
            out.append(c)
    return tuple(out)


def enumerate_5cycles(s: int) -> list[FiveCycle]:
    """Every five-cycle with support in I(s)."""
    if s > 9:
        raise ValueError("s must be at most 9")
    return list(_cycles(s))


def five_cycles_in(gamma: Combination) -> list[FiveCycle]:
    """All five-cycles whose intervals all lie in supp gamma (by induced subgraph search)."""
    sup = gamma.support()
    out = []
    for sub in itertools.combinations(sup, 5):
        if is_five_cycle_graph(sub):
            try:
                out.append(FiveCycle.from_combination(list(sub)))
            except ValueError:
                continue
    return sorted(out)


# ---------------------------------------------------------------------------
# labelings

Labeling = tuple[int, int, int, int, int]


def labelings() -> list[Labeling]:
    """The ten labelings l1..l5 (1-based) from the bundled data."""
    return load_labelings()


def derive_labelings() -> list[Labeling]:
    """Bijections of the pentagon that send non-adjacent positions to adjacent ones."""
    def cyc_adj(i, j):
        return (i - j) % 5 in (1, 4)

    out = []
    for perm in itertools.permutations(range(5)):
        if all(cyc_adj(perm[p], perm[q]) for p in range(5) for q in range(p + 1, 5) if not cyc_adj(p, q)):
            out.append(tuple(x + 1 for x in perm))
    return out


def labeling_clique(g1: FiveCycle, g2: FiveCycle, lab: Labeling) -> list[Box]:
    """Position p of g2 is paired with position l_p of g1."""
    p1, p2 = g1.positions, g2.positions
    return [Box((p1[lab[p] - 1], p2[p])) for p in range(5)]


def solve_construction_2d(g1: FiveCycle, g2: FiveCycle) -> list[tuple[Labeling, list[Box]]]:
    """All 5-cliques in I^2 whose projections are g1 and g2.

    Every pairing of the ten intervals is tried; the surviving pairings must be
    exactly the ten labelings.
    """
    p1, p2 = g1.positions, g2.positions
    found = []
    for perm in itertools.permutations(range(5)):
        boxes = [Box((p1[perm[p]], p2[p])) for p in range(5)]
        if is_clique(boxes):
            found.append((tuple(x + 1 for x in perm), boxes))
    if {lab for lab, _ in found} != set(labelings()):
        raise AssertionError("construction problem solutions differ from the ten labelings")
    order = {lab: k for k, lab in enumerate(labelings())}
    return sorted(found, key=lambda t: order[t[0]])


# ---------------------------------------------------------------------------
# b_2

def boxes_2d(s: int = 3) -> list[Box]:
    vs = interval_graph(s)
    return [Box((x, y)) for x in vs for y in vs]


def max_clique_2d(s: int = 3) -> int:
    """Clique number of the box graph on I(s) x I(s); 5 for s = 3."""
    return omega(Combination(boxes_2d(s)), box_adjacent)


def cliques_of_size(k: int, s: int = 3) -> list[list[Box]]:
    """All k-cliques of the box graph on I(s) x I(s)."""
    bs = boxes_2d(s)
    n = len(bs)
    nb = [{j for j in range(n) if j != i and box_adjacent(bs[i], bs[j])} for i in range(n)]
    out = []

    def rec(chosen, cand):
        if len(chosen) == k:
            out.append([bs[i] for i in chosen])
            return
        for i in sorted(cand):
            rec(chosen + [i], {j for j in cand & nb[i] if j > i})

    rec([], set(range(n)))
    return out


@dataclass(frozen=True)
class Decomposition:
    cycles: tuple[FiveCycle, FiveCycle]
    edges: tuple[frozenset, frozenset]


def decompose_2d_clique(clique: Sequence[Box]) -> Decomposition:
    """Split the ten edges of a 2-D 5-clique by the axis on which the boxes touch."""
    cl = list(clique)
    if len(cl) != 5 or any(len(b) != 2 for b in cl) or not is_clique(cl):
        raise ValueError("input is not a 5-clique in I^2")
    edges = ([], [])
    for i, j in itertools.combinations(range(5), 2):
        for k in range(2):
            if adjacent(cl[i][k], cl[j][k]):
                edges[k].append((i, j))
    if len(edges[0]) != 5 or len(edges[1]) != 5:
        raise AssertionError("edge sets of a 5-clique must be two 5-cycles")
    gamma = Combination(cl)
    cyc = tuple(FiveCycle.from_combination(project(gamma, k)) for k in range(2))
    return Decomposition(cyc, (frozenset(edges[0]), frozenset(edges[1])))


def isometry_classes_2d(cliques: Sequence[Sequence[Box]], s: int) -> list[list[int]]:
    """Classes of cliques under axis swap and the reflection of either axis."""
    def refl(v: Interval) -> Interval:
        return Interval(2 * (s + 1) - v.hi, 2 * (s + 1) - v.lo)

    def images(cl):
        out = set()
        for swap in (False, True):
            for r0 in (False, True):
                for r1 in (False, True):
                    img = []
                    for b in cl:
                        x, y = (b[1], b[0]) if swap else (b[0], b[1])
                        img.append(Box((refl(x) if r0 else x, refl(y) if r1 else y)))
                    out.add(tuple(sorted(img)))
        return out

    keys = [tuple(sorted(c)) for c in cliques]
    classes: list[list[int]] = []
    assigned: dict = {}
    for i, c in enumerate(cliques):
        if keys[i] in assigned:
            continue
        orb = images(c)
        cls = [j for j in range(len(cliques)) if keys[j] in orb]
        for j in cls:
            assigned[keys[j]] = len(classes)
        classes.append(cls)
    return classes
