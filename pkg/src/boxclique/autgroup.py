"""Aut(I(s)), the product groups acting on boxes, and orbit machinery."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .core import Box, Combination, Interval, adjacent, interval_graph, iv
from .data import sections


class VertexPerm:
    """A bijection of V(I(s)), stored as an image tuple over the canonical vertex order."""

    __slots__ = ("s", "images", "_map")

    def __init__(self, s: int, mapping):
        self.s = s
        verts = interval_graph(s)
        if isinstance(mapping, dict):
            imgs = tuple(mapping[v] for v in verts)
        else:
            imgs = tuple(mapping)
        if sorted(imgs) != list(verts):
            raise ValueError("not a bijection of V(I(s))")
        self.images = imgs
        self._map = dict(zip(verts, imgs))

    def __call__(self, v: Interval) -> Interval:
        return self._map[v]

    def __mul__(self, other: "VertexPerm") -> "VertexPerm":
        """``(f * g)(v) = f(g(v))``."""
        return VertexPerm(self.s, tuple(self._map[other._map[v]] for v in interval_graph(self.s)))

    def inverse(self) -> "VertexPerm":
        return VertexPerm(self.s, {w: v for v, w in self._map.items()})

    def is_identity(self) -> bool:
        return self.images == interval_graph(self.s)

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def preserves_adjacency(self) -> bool:
        vs = interval_graph(self.s)
        return all(adjacent(x, y) == adjacent(self(x), self(y)) for x, y in itertools.combinations(vs, 2))

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexPerm) and self.s == other.s and self.images == other.images

    def __hash__(self) -> int:
        return hash((self.s, self.images))

    def __repr__(self) -> str:
        moved = [f"{v}->{w}" for v, w in self._map.items() if v != w]
        return f"VertexPerm(s={self.s}: {', '.join(moved) or 'id'})"


def reflection(s: int) -> VertexPerm:
    """h: [a,b] -> [s+1-b, s+1-a]."""
    return VertexPerm(s, {v: iv(s + 1 - v.right, s + 1 - v.left) for v in interval_graph(s)})


def identity(s: int) -> VertexPerm:
    return VertexPerm(s, interval_graph(s))


def degree_profile(s: int) -> dict[Interval, int]:
    if s < 4:
        raise ValueError("the degree lemma is stated for s >= 4")
    vs = interval_graph(s)
    return {v: sum(adjacent(v, w) for w in vs) for v in vs}


def degree_formula(v: Interval, s: int) -> int:
    """The three-case degree lemma for I(s), s >= 4."""
    i, j = int(v.left), int(v.right)
    if i == 1 and j == s:
        return 2
    if (i, j) in ((0, 1), (s, s + 1)) or (i == 1 and j <= s - 1) or (i >= 2 and j == s):
        return s - (j - i)
    return s - (j - i) - 1


# ---------------------------------------------------------------------------
# brute force

@lru_cache(maxsize=None)
def _aut_bruteforce(s: int) -> tuple[VertexPerm, ...]:
    vs = interval_graph(s)
    n = len(vs)
    nb = [frozenset(j for j in range(n) if adjacent(vs[i], vs[j])) for i in range(n)]
    deg = [len(x) for x in nb]
    order = sorted(range(n), key=lambda i: (-deg[i], i))
    img = [-1] * n
    used = [False] * n
    out = []

    def rec(k: int) -> None:
        if k == n:
            out.append(VertexPerm(s, tuple(vs[img[i]] for i in range(n))))
            return
        i = order[k]
        for c in range(n):
            if used[c] or deg[c] != deg[i]:
                continue
            if all((img[j] in nb[c]) == (j in nb[i]) for j in order[:k]):
                img[i] = c
                used[c] = True
                rec(k + 1)
                used[c] = False
                img[i] = -1

    rec(0)
    return tuple(out)


def aut_bruteforce(s: int) -> list[VertexPerm]:
    if not 1 <= s <= 9:
        raise ValueError("s must lie in 1..9")
    return list(_aut_bruteforce(s))


# ---------------------------------------------------------------------------
# closed form from the fixture tables

_TERM = re.compile(r"[+-]?[^+-]+")


def _lin(expr: str, env: dict) -> int:
    total = 0
    for t in _TERM.findall(expr):
        sign = -1 if t[0] == "-" else 1
        t = t.lstrip("+-")
        total += sign * (int(t) if t.isdigit() else env[t])
    return total


def _pair(expr: str, env: dict) -> Interval:
    a, b = expr.split(":")
    return iv(_lin(a, env), _lin(b, env))


@lru_cache(maxsize=None)
def _tables() -> dict:
    sec = sections("aut_interval_graph.txt")
    out = {}
    for name in ("corner", "low", "inner"):
        heads = sec["@" + name][0].split()
        rows = {}
        for line in sec[name]:
            idx, *vals = line.split()
            rows[int(idx)] = vals
        out[name] = (heads, rows)
    return out


def _named(s: int) -> dict[str, Interval]:
    return {"a": iv(0, 1), "b": iv(1, 2), "c": iv(s - 1, s), "d": iv(s, s + 1),
            "u": iv(2, s - 1), "v": iv(1, s - 1), "w": iv(2, s), "x": iv(1, s)}


def _inner_pattern(v: Interval, s: int):
    p, q = int(v.left), int(v.right)
    mid = range(3, s - 1)
    if p == 1 and q in mid:
        return "1:i", {"i": q}
    if p == 2 and q in mid:
        return "2:i", {"i": q}
    if p in mid and q == s - 1:
        return "j:s-1", {"j": p}
    if p in mid and q == s:
        return "j:s", {"j": p}
    if p in mid and q in mid:
        return "i:j", {"i": p, "j": q}
    raise KeyError(v)


def aut_closed_form(s: int) -> list[VertexPerm]:
    """phi_1..phi_8 assembled from the transcribed tables (s >= 4)."""
    if s < 4:
        raise ValueError("closed form tables need s >= 4")
    tab = _tables()
    named = _named(s)
    out = []
    for k in range(1, 9):
        m = {}
        for part in ("corner", "low"):
            heads, rows = tab[part]
            for src, dst in zip(heads, rows[k]):
                m[named[src]] = named[dst]
        heads, rows = tab["inner"]
        col = {h: c for c, h in enumerate(heads)}
        for v in interval_graph(s):
            if v in m:
                continue
            pat, env = _inner_pattern(v, s)
            env = dict(env, s=s)
            m[v] = _pair(rows[k][col[pat]], env)
        out.append(VertexPerm(s, m))
    return out


def aut_interval_graph(s: int) -> list[VertexPerm]:
    """Aut(I(s)); for s >= 4 the closed form, cross-checked against brute force."""
    brute = aut_bruteforce(s)
    if s >= 4:
        closed = aut_closed_form(s)
        if set(closed) != set(brute):
            raise AssertionError(f"closed-form Aut({s}) disagrees with brute force")
        return closed
    return brute


def element_order_profile(elements: Iterable) -> dict[int, int]:
    prof: dict[int, int] = {}
    for g in elements:
        o = g.order()
        prof[o] = prof.get(o, 0) + 1
    return dict(sorted(prof.items()))


# ---------------------------------------------------------------------------
# symmetries of boxes

@dataclass(frozen=True)
class BoxSymmetry:
    """``s_sigma o (f_1 x ... x f_n)``: coordinate k of the image is ``f_{sigma[k]}(B[sigma[k]])``."""

    sigma: tuple[int, ...]
    maps: tuple[VertexPerm, ...]

    def __call__(self, b: Box) -> Box:
        return Box(self.maps[src](b[src]) for src in self.sigma)

    def act_family(self, fam: Iterable[Box]) -> tuple[Box, ...]:
        return tuple(sorted(self(b) for b in fam))

    def act_combination(self, gamma: Combination) -> Combination:
        return gamma.pushforward(self)

    def __mul__(self, other: "BoxSymmetry") -> "BoxSymmetry":
        """Composition ``(self * other)(B) = self(other(B))``."""
        sig = tuple(other.sigma[k] for k in self.sigma)
        maps = [None] * len(sig)
        for k, src in enumerate(self.sigma):
            mid = other.sigma[src]
            maps[mid] = self.maps[src] * other.maps[mid]
        return BoxSymmetry(sig, tuple(maps))

    def orientation(self) -> int:
        """sign(sigma) times (-1)^(number of reflected axes)."""
        sign = _perm_sign(self.sigma)
        for f in self.maps:
            if not f.is_identity():
                if f != reflection(f.s):
                    raise ValueError("orientation is defined for isometries only")
                sign = -sign
        return sign


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


FLAVORS = ("Aut3", "A3", "Iso3", "Iso3+")


def product_group(s: int, flavor: str, n: int = 3) -> list[BoxSymmetry]:
    """Aut^n(s), A^n(s) = S_n x| Aut^n(s), Iso^n(s) or its orientation-preserving half."""
    if s < 4:
        raise ValueError("product groups are used for s >= 4")
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    if flavor in ("Aut3", "A3"):
        per_axis = aut_interval_graph(s)
    else:
        per_axis = [identity(s), reflection(s)]
    sigmas = [tuple(range(n))] if flavor == "Aut3" else list(itertools.permutations(range(n)))
    out = [BoxSymmetry(sig, maps) for sig in sigmas for maps in itertools.product(per_axis, repeat=n)]
    if flavor == "Iso3+":
        out = [g for g in out if g.orientation() == 1]
    return out


# ---------------------------------------------------------------------------
# orbits

@dataclass
class GroupAction:
    elements: Sequence
    act: Callable[[object, Hashable], Hashable]
    targets: Sequence[Hashable]


@dataclass
class Orbit:
    representative: Hashable
    members: frozenset
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json(self, serialize=repr) -> dict:
        return {"orbit_size": self.size, "stabilizer_order": self.stabilizer_order,
                "representative": serialize(self.representative)}


def orbits(action: GroupAction, key: Callable = None) -> list[Orbit]:
    """Partition ``action.targets`` into orbits; each target must be closed under the group.

    Representatives are the key-minimal members; orbits are listed in order of
    first appearance among the targets.
    """
    key = key or (lambda x: x)
    seen: dict = {}
    out = []
    group_order = len(action.elements)
    for t in action.targets:
        if t in seen:
            continue
        members = set()
        stab = 0
        for g in action.elements:
            y = action.act(g, t)
            members.add(y)
            if y == t:
                stab += 1
        if len(members) * stab != group_order:
            raise AssertionError("orbit-stabilizer mismatch; action is not a group action")
        orb = Orbit(min(members, key=key), frozenset(members), stab)
        for y in members:
            seen[y] = orb
        out.append(orb)
    return out


def canonical_rep(x, group: Sequence, act: Callable, key: Callable = None):
    """Key-least element of the orbit of ``x``."""
    key = key or (lambda y: y)
    return min((act(g, x) for g in group), key=key)


def profile_key(gamma: Combination, s: int) -> tuple[int, ...]:
    """Multiplicity vector over the canonical vertex order of I(s)."""
    return tuple(gamma.mult(v) for v in interval_graph(s))


def canonical_profile(gamma: Combination, s: int) -> Combination:
    """Orbit representative of a profile under Aut(I(s)): least multiplicity vector."""
    return canonical_rep(gamma, aut_interval_graph(s), lambda g, x: x.pushforward(g),
                         key=lambda y: profile_key(y, s))
