"""Intervals, boxes, formal combinations and the alpha/omega calculus.

Endpoints live on the half-grid: ``Interval(lo, hi)`` stands for the closed
interval ``[lo/2, hi/2]``.  Use :func:`iv` to build intervals from ordinary
endpoints, e.g. ``iv(0, 1) == Interval(0, 2)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

Number = Union[int, Fraction, str]


def _half(x: int) -> str:
    return str(x // 2) if x % 2 == 0 else f"{x}/2"


class Interval(tuple):
    """Closed interval ``[lo/2, hi/2]`` with ``lo < hi``."""

    __slots__ = ()

    def __new__(cls, lo: int, hi: int):
        lo, hi = int(lo), int(hi)
        if lo >= hi:
            raise ValueError(f"degenerate interval ({lo}, {hi})")
        return tuple.__new__(cls, (lo, hi))

    lo = property(itemgetter(0))
    hi = property(itemgetter(1))

    @property
    def left(self) -> Fraction:
        return Fraction(self[0], 2)

    @property
    def right(self) -> Fraction:
        return Fraction(self[1], 2)

    def __repr__(self) -> str:
        return f"[{_half(self[0])},{_half(self[1])}]"

    __str__ = __repr__

    def __getnewargs__(self):
        return (self[0], self[1])


def iv(a: Number, b: Number) -> Interval:
    """Interval ``[a, b]`` given by its real endpoints."""
    a2, b2 = 2 * Fraction(a), 2 * Fraction(b)
    if a2.denominator != 1 or b2.denominator != 1:
        raise ValueError(f"[{a},{b}] is not on the half-grid")
    return Interval(int(a2), int(b2))


_IV_RE = re.compile(r"\[\s*([0-9/]+)\s*,\s*([0-9/]+)\s*\]")


def parse_interval(text: str) -> Interval:
    m = _IV_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"cannot parse interval {text!r}")
    return iv(Fraction(m.group(1)), Fraction(m.group(2)))


class Box(tuple):
    """Standard n-box: a tuple of n intervals."""

    __slots__ = ()

    def __new__(cls, coords: Iterable[Interval]):
        coords = tuple(c if isinstance(c, Interval) else Interval(*c) for c in coords)
        if not coords:
            raise ValueError("a box needs at least one coordinate")
        return tuple.__new__(cls, coords)

    @property
    def dim(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return "x".join(map(repr, self))

    __str__ = __repr__

    def __getnewargs__(self):
        return (tuple(self),)


def box(*coords: Interval) -> Box:
    return Box(coords)


def parse_box(text: str) -> Box:
    parts = re.split(r"\s*[x×]\s*", text.strip())
    return Box(parse_interval(p) for p in parts)


def adjacent(a: Interval, b: Interval) -> bool:
    """True iff the two intervals share exactly one point."""
    return a[1] == b[0] or b[1] == a[0]


def _check_dim(a: Box, b: Box) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def box_adjacent(a: Box, b: Box) -> bool:
    _check_dim(a, b)
    return any(x[1] == y[0] or y[1] == x[0] for x, y in zip(a, b))


def eps_vector(a: Box, b: Box) -> tuple[int, ...]:
    """Per-axis adjacency bits of two boxes."""
    _check_dim(a, b)
    return tuple(int(x[1] == y[0] or y[1] == x[0]) for x, y in zip(a, b))


def eps_code(a: Box, b: Box) -> int:
    """The epsilon vector packed little-endian: axis k contributes ``2**k``."""
    return sum(bit << k for k, bit in enumerate(eps_vector(a, b)))


def is_clique(family: Sequence[Box]) -> bool:
    n = len(family)
    return all(box_adjacent(family[i], family[j]) for i in range(n) for j in range(i + 1, n))


class Combination:
    """Finite formal sum ``sum k_x x`` of vertices with positive integer counts.

    Items are kept sorted, so equality, hashing and serialization are canonical.
    ``universe`` is an informal tag and takes no part in equality.
    """

    __slots__ = ("_items", "_index", "universe")

    def __init__(self, data: Union[Mapping, Iterable, None] = None, universe=None):
        counts: dict = {}
        if data is None:
            pass
        elif isinstance(data, Combination):
            counts = dict(data._items)
        elif isinstance(data, Mapping):
            for v, k in data.items():
                if k < 0:
                    raise ValueError("negative multiplicity")
                if k:
                    counts[v] = counts.get(v, 0) + int(k)
        else:
            for v in data:
                counts[v] = counts.get(v, 0) + 1
        self._items = tuple(sorted(counts.items()))
        self._index = dict(self._items)
        self.universe = universe

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple], universe=None) -> "Combination":
        return cls(dict(pairs), universe)

    def items(self) -> tuple:
        return self._items

    def support(self) -> tuple:
        return tuple(v for v, _ in self._items)

    def mult(self, v) -> int:
        return self._index.get(v, 0)

    __getitem__ = mult

    def __contains__(self, v) -> bool:
        return v in self._index

    @property
    def size(self) -> int:
        """``|gamma|``, the total multiplicity."""
        return sum(k for _, k in self._items)

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return bool(self._items)

    def elements(self) -> Iterator:
        for v, k in self._items:
            for _ in range(k):
                yield v

    def __iter__(self):
        return self.elements()

    def __eq__(self, other) -> bool:
        return isinstance(other, Combination) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __lt__(self, other: "Combination") -> bool:
        return self._items < other._items

    def __le__(self, other: "Combination") -> bool:
        """Subcombination test ``delta <= gamma``."""
        return all(other._index.get(v, 0) >= k for v, k in self._items)

    def __add__(self, other: "Combination") -> "Combination":
        d = dict(self._items)
        for v, k in other._items:
            d[v] = d.get(v, 0) + k
        return Combination(d, self.universe)

    def __sub__(self, other: "Combination") -> "Combination":
        if not other <= self:
            raise ValueError("difference of combinations is not a combination")
        d = dict(self._items)
        for v, k in other._items:
            d[v] -= k
        return Combination(d, self.universe)

    def restrict(self, vertices: Iterable) -> "Combination":
        """Induced subcombination on ``vertices`` (full multiplicities kept)."""
        keep = set(vertices)
        return Combination({v: k for v, k in self._items if v in keep}, self.universe)

    def pushforward(self, f: Callable) -> "Combination":
        d: dict = {}
        for v, k in self._items:
            w = f(v)
            d[w] = d.get(w, 0) + k
        return Combination(d)

    def __repr__(self) -> str:
        if not self._items:
            return "0"
        return "+".join(f"{k if k > 1 else ''}{v!r}" for v, k in self._items)

    def to_json(self) -> list:
        return [{"vertex": _jsonable(v), "count": k} for v, k in self._items]

    @classmethod
    def from_json(cls, data: list) -> "Combination":
        return cls({_from_jsonable(d["vertex"]): d["count"] for d in data})


def _jsonable(v):
    if isinstance(v, Box):
        return [list(c) for c in v]
    if isinstance(v, Interval):
        return list(v)
    return v


def _from_jsonable(x):
    if isinstance(x, list) and x and isinstance(x[0], list):
        return Box(Interval(*c) for c in x)
    if isinstance(x, list):
        return Interval(*x)
    return x


_TERM_RE = re.compile(r"\s*(\d*)\s*(\[[^\]]*\](?:\s*[x×]\s*\[[^\]]*\])*)\s*")


def parse_combination(text: str) -> Combination:
    """Parse ``'2[0,1]+[1,3]'`` style sums (boxes written ``[a,b]x[c,d]``)."""
    d: dict = {}
    for term in text.split("+"):
        m = _TERM_RE.fullmatch(term)
        if not m:
            raise ValueError(f"bad term {term!r}")
        k = int(m.group(1) or 1)
        body = m.group(2)
        v = parse_box(body) if re.search(r"[x×]", body) else parse_interval(body)
        d[v] = d.get(v, 0) + k
    return Combination(d)


# ---------------------------------------------------------------------------
# The interval graphs I(s)

@lru_cache(maxsize=None)
def interval_graph(s: int) -> tuple[Interval, ...]:
    """Vertices of I(s) in canonical (lo, hi) order."""
    if s < 1:
        raise ValueError("s must be positive")
    vs = [iv(0, 1), iv(s, s + 1)] + [iv(i, j) for i in range(1, s + 1) for j in range(i + 1, s + 1)]
    return tuple(sorted(set(vs)))


def in_interval_graph(v: Interval, s: int) -> bool:
    return v in _vertex_set(s)


@lru_cache(maxsize=None)
def _vertex_set(s: int) -> frozenset:
    return frozenset(interval_graph(s))


def units(s: int) -> tuple[Interval, ...]:
    return tuple(iv(i, i + 1) for i in range(s + 1))


@lru_cache(maxsize=None)
def eps_families(s: int) -> tuple[frozenset, ...]:
    """The families I(s, eps), indexed by eps packed as bits (eps_1 is bit 0).

    [u,v] belongs iff eps_u = 0 and eps_v = 1; [0,1] iff eps_1 = 1;
    [s,s+1] iff eps_s = 0.
    """
    out = []
    for bits in range(1 << s):
        e = [(bits >> k) & 1 for k in range(s)]
        fam = set()
        if e[0] == 1:
            fam.add(iv(0, 1))
        if e[s - 1] == 0:
            fam.add(iv(s, s + 1))
        for u in range(1, s + 1):
            for v in range(u + 1, s + 1):
                if e[u - 1] == 0 and e[v - 1] == 1:
                    fam.add(iv(u, v))
        out.append(frozenset(fam))
    return tuple(out)


def level(gamma: Combination) -> int:
    """Smallest s with supp gamma inside I(s), or raise if there is none."""
    sup = gamma.support()
    if not sup:
        raise ValueError("empty combination")
    s = max(1, max(v.hi for v in sup) // 2 - 1)
    for t in (s, s + 1):
        if all(v in _vertex_set(t) for v in sup):
            return t
    raise ValueError(f"support of {gamma!r} is not inside any I(s)")


def alpha(gamma: Combination, s: int | None = None) -> int:
    """Independence number of G_gamma via the maximal families I(s, eps)."""
    if s is None:
        s = level(gamma)
    vs = _vertex_set(s)
    for v in gamma.support():
        if v not in vs:
            raise ValueError(f"{v!r} is not a vertex of I({s})")
    return max(sum(gamma.mult(v) for v in fam) for fam in eps_families(s))


# ---------------------------------------------------------------------------
# Brute-force graph invariants on supports

Adjacency = Callable[[object, object], bool]


def _neighbour_masks(vertices: Sequence, adj: Adjacency) -> list[int]:
    n = len(vertices)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if adj(vertices[i], vertices[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def max_weight_independent(weights: Sequence[int], nbrs: Sequence[int]) -> int:
    """Exact maximum-weight independent set over bitmask neighbourhoods."""
    best = 0

    def rec(cand: int, acc: int, rest: int) -> None:
        nonlocal best
        if acc + rest <= best:
            return
        if not cand:
            best = acc
            return
        v = (cand & -cand).bit_length() - 1
        w = weights[v]
        inter = cand & nbrs[v]
        lost = w + sum(weights[u] for u in _bits(inter))
        rec(cand & ~(1 << v) & ~nbrs[v], acc + w, rest - lost)
        if inter:
            rec(cand & ~(1 << v), acc, rest - w)

    rec((1 << len(weights)) - 1, 0, sum(weights))
    return best


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def alpha_bruteforce(gamma: Combination, adj: Adjacency = adjacent) -> int:
    """Independence number of G_gamma by exhaustive search (copies are independent)."""
    sup = gamma.support()
    return max_weight_independent([gamma.mult(v) for v in sup], _neighbour_masks(sup, adj))


def omega(gamma: Combination, adj: Adjacency = adjacent) -> int:
    """Clique number of G[supp gamma]; multiplicities are irrelevant."""
    sup = gamma.support()
    if not sup:
        return 0
    n = len(sup)
    nb = _neighbour_masks(sup, adj)
    full = (1 << n) - 1
    comp = [full & ~nb[i] & ~(1 << i) for i in range(n)]
    return max_weight_independent([1] * n, comp)


def graph_counts(gamma: Combination, adj: Adjacency = adjacent) -> tuple[int, int]:
    """``(|V(gamma)|, |E(gamma)|)`` with ``|E| = sum over edges xy of k_x k_y``."""
    items = gamma.items()
    edges = 0
    for i, (x, kx) in enumerate(items):
        for y, ky in items[i + 1:]:
            if adj(x, y):
                edges += kx * ky
    return gamma.size, edges


def edge_count(gamma: Combination, adj: Adjacency = adjacent) -> int:
    return graph_counts(gamma, adj)[1]


def family_sum(family: Iterable[Box]) -> Combination:
    """The combination ``sum_{I in F} I``."""
    return Combination(list(family))


def project(gamma: Combination, axes: Union[int, Iterable[int]]) -> Combination:
    """Push a combination of boxes forward along the coordinates in ``axes``.

    A single integer axis yields a combination of intervals; an iterable of
    axes yields boxes of the corresponding dimension.  Axes are 0-based.
    """
    sup = gamma.support()
    if not sup:
        return Combination()
    n = len(sup[0])
    if isinstance(axes, int):
        if not 0 <= axes < n:
            raise IndexError(f"axis {axes} out of range for dimension {n}")
        return gamma.pushforward(itemgetter(axes))
    ks = tuple(axes)
    if not ks or any(not 0 <= k < n for k in ks) or len(set(ks)) != len(ks):
        raise IndexError(f"invalid axis set {ks} for dimension {n}")
    return gamma.pushforward(lambda b: Box(b[k] for k in ks))
