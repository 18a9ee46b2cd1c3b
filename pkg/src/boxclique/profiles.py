"""Candidate axis profiles L(s,v), their Aut(I(s)) quotients, types and N(v).

A profile over I(s) is a combination lambda with |lambda| = v, every
eps-family mass at most 5 (so alpha(lambda) <= 5) and multiplicity at least
one on the skeleton S(s).  Two bucket conventions are provided:

``"skeleton"``
    the literal system: every solution with k_I >= 1 on S(s);
``"saturated"``
    the solutions whose whole Aut(I(s))-orbit solves the system.

The two differ only for s = 4, where an automorphism moves the skeleton.  The
saturated buckets are closed under Aut(I(s)) and reproduce the cardinality
tables; the literal buckets are what the printed representative tables list,
and are what the decomposition pipeline consumes.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb

from . import kernels
from .autgroup import aut_interval_graph, profile_key
from .compress import is_incompressible, skeleton
from .core import Combination, Interval, adjacent, edge_count, eps_families, interval_graph

S_RANGE = range(3, 10)
V_RANGE = range(12, 18)
MODES = ("saturated", "skeleton")
ALPHA_CAP = 5


def _check(s: int, v: int, mode: str = "saturated") -> None:
    if s not in S_RANGE:
        raise ValueError(f"s must lie in 3..9, got {s}")
    if v not in V_RANGE:
        raise ValueError(f"v must lie in 12..17, got {v}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ProfileSystem:
    """The integer system: sum k_I = v, eps-family masses <= 5, k_I >= 1 on S(s)."""

    s: int
    v: int

    def __post_init__(self):
        _check(self.s, self.v)

    @property
    def variables(self) -> tuple[Interval, ...]:
        return interval_graph(self.s)

    def lower_bounds(self) -> list[int]:
        sk = skeleton(self.s)
        return [1 if x in sk else 0 for x in self.variables]

    def families(self) -> list[frozenset]:
        """The distinct maximal families I(s, eps)."""
        return sorted(set(eps_families(self.s)), key=lambda f: sorted(f))

    def solve(self) -> list[tuple[int, ...]]:
        vs = self.variables
        fams = self.families()
        fam_of_var = [[f for f, fam in enumerate(fams) if x in fam] for x in vs]
        sols = kernels.enumerate_profiles(fam_of_var, self.lower_bounds(), len(fams), ALPHA_CAP, self.v)
        return sorted(sols)


@dataclass(frozen=True)
class Profile:
    s: int
    comb: Combination = field(compare=True)

    @cached_property
    def e(self) -> int:
        return edge_count(self.comb)

    @cached_property
    def type_witness(self):
        return type_witness(self.comb)

    @property
    def ptype(self) -> str:
        return "I" if self.type_witness else "II"

    @cached_property
    def incompressible(self) -> bool:
        return is_incompressible(self.comb, self.s)

    @property
    def v(self) -> int:
        return self.comb.size

    def key(self) -> tuple[int, ...]:
        return profile_key(self.comb, self.s)

    def label(self) -> str:
        return f"{self.e}'" if self.ptype == "II" else str(self.e)

    def __repr__(self) -> str:
        return f"Profile(s={self.s}, {self.comb!r})"


def _vec_to_comb(vec, vs) -> Combination:
    return Combination({x: k for x, k in zip(vs, vec) if k})


@lru_cache(maxsize=None)
def _literal(s: int, v: int) -> tuple[Profile, ...]:
    vs = interval_graph(s)
    return tuple(Profile(s, _vec_to_comb(vec, vs)) for vec in ProfileSystem(s, v).solve())


@lru_cache(maxsize=None)
def _saturated(s: int, v: int) -> tuple[Profile, ...]:
    lit = _literal(s, v)
    inside = {p.comb for p in lit}
    return tuple(p for p in lit if _orbit(p) <= inside)


def enumerate_L(s: int, v: int, mode: str = "saturated") -> list[Profile]:
    """All solutions of the profile system in the given bucket convention."""
    _check(s, v, mode)
    return list(_literal(s, v) if mode == "skeleton" else _saturated(s, v))


def _orbit(p: Profile) -> set[Combination]:
    return {p.comb.pushforward(g) for g in aut_interval_graph(p.s)}


@lru_cache(maxsize=None)
def _quotient(s: int, v: int, mode: str) -> tuple[tuple[Profile, int], ...]:
    members = enumerate_L(s, v, mode)
    inside = {p.comb: p for p in members}
    seen: set = set()
    out = []
    for p in members:
        if p.comb in seen:
            continue
        orb = _orbit(p) & inside.keys()
        seen |= orb
        rep = min(orb, key=lambda c: profile_key(c, s))
        out.append((inside[rep], len(orb)))
    out.sort(key=lambda t: t[0].key())
    return tuple(out)


def quotient_Lhat(s: int, v: int, mode: str = "saturated") -> list[Profile]:
    """One representative (least multiplicity vector) per Aut(I(s))-orbit of L(s,v).

    In the literal convention an orbit may leave the bucket; it is then cut
    down to its members inside the bucket.
    """
    _check(s, v, mode)
    return [p for p, _ in _quotient(s, v, mode)]


def canonical_in_bucket(p: Profile, mode: str = "saturated") -> Profile:
    """Representative of ``p`` as produced by :func:`quotient_Lhat`."""
    inside = {q.comb for q in enumerate_L(p.s, p.v, mode)}
    orb = _orbit(p) & inside
    if not orb:
        raise ValueError(f"{p!r} does not lie in L({p.s},{p.v})")
    return Profile(p.s, min(orb, key=lambda c: profile_key(c, p.s)))


def Lhat(v: int, mode: str = "saturated") -> list[Profile]:
    """L-hat(v): the union of L-hat(s,v) over s = 3..9."""
    return [p for s in S_RANGE for p in quotient_Lhat(s, v, mode)]


def table1(mode: str = "saturated", vs=(12, 13)) -> dict[int, list[int]]:
    return {v: [len(enumerate_L(s, v, mode)) for s in S_RANGE] for v in vs}


def table2(mode: str = "saturated", vs=(12, 13)) -> dict[int, list[int]]:
    return {v: [len(quotient_Lhat(s, v, mode)) for s in S_RANGE] for v in vs}


# ---------------------------------------------------------------------------
# types

def _independent(vertices) -> bool:
    return all(not adjacent(a, b) for a, b in itertools.combinations(vertices, 2))


def independent_blocks(gamma: Combination, size: int = 5) -> list[Combination]:
    """Induced subcombinations of total mass ``size`` whose support is independent."""
    sup = gamma.support()
    out = []

    def rec(start, chosen, mass):
        if mass == size:
            out.append(gamma.restrict(chosen))
            return
        for i in range(start, len(sup)):
            x = sup[i]
            m = gamma.mult(x)
            if mass + m <= size and all(not adjacent(x, y) for y in chosen):
                rec(i + 1, chosen + [x], mass + m)

    rec(0, [], 0)
    return out


def type_decompositions(gamma: Combination) -> list[tuple[Combination, Combination]]:
    """All ordered pairs (beta1, beta2) of disjoint independent blocks of mass 5."""
    blocks = independent_blocks(gamma)
    out = []
    for b1 in blocks:
        s1 = set(b1.support())
        for b2 in blocks:
            if not s1 & set(b2.support()):
                out.append((b1, b2))
    return out


def type_witness(gamma: Combination):
    """A pair (beta1, beta2) certifying type I, or None for type II."""
    decs = type_decompositions(gamma)
    return min(decs, key=lambda d: (d[0].items(), d[1].items())) if decs else None


def classify_type(p: Profile | Combination) -> str:
    comb = p.comb if isinstance(p, Profile) else p
    return "I" if type_witness(comb) else "II"


# ---------------------------------------------------------------------------
# N(v) and the type II edge bound

def build_N(v: int, mode: str = "saturated") -> list[tuple[Profile, Profile, Profile]]:
    """Unordered triples from L-hat(v) with e1 + e2 + e3 >= C(v, 2)."""
    if v not in (12, 13):
        raise ValueError("N(v) is used for v in {12, 13}")
    reps = Lhat(v, mode)
    need = comb(v, 2)
    es = [p.e for p in reps]
    return [(reps[i], reps[j], reps[k])
            for i, j, k in itertools.combinations_with_replacement(range(len(reps)), 3)
            if es[i] + es[j] + es[k] >= need]


@dataclass
class EdgeBoundReport:
    v: int
    bound: float
    type2: list[Profile]
    violations: list[Profile]
    equality: list[Profile]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_edge_bound_typeII(v: int, mode: str = "saturated") -> EdgeBoundReport:
    """Check 3 e(lambda) <= C(v, 2) for every type II profile of L-hat(v)."""
    need = comb(v, 2)
    t2 = [p for p in Lhat(v, mode) if p.ptype == "II"]
    return EdgeBoundReport(v, need / 3, t2,
                           [p for p in t2 if 3 * p.e > need],
                           [p for p in t2 if 3 * p.e == need])


# ---------------------------------------------------------------------------
# tables in the printed layout

def profiles_csv(profiles, s: int) -> str:
    """One column per vertex of I(s) in (lo, hi) order, then e with a prime for type II."""
    vs = interval_graph(s)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [repr(x) for x in vs] + ["e"])
    for n, p in enumerate(profiles, 1):
        w.writerow([n] + [p.comb.mult(x) for x in vs] + [p.label()])
    return buf.getvalue()


@dataclass
class AppendixCheck:
    s: int
    v: int
    expected: int
    found: int
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)
    bad_rows: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.bad_rows) and self.expected == self.found


def check_appendix_b(table: dict | None = None, mode: str = "skeleton") -> list[AppendixCheck]:
    """Compare the bundled representative tables with L-hat(s,v) modulo Aut(I(s))."""
    from .data import load_appendix_b

    table = table if table is not None else load_appendix_b()
    out = []
    for (s, v), rows in sorted(table.items()):
        reps = {p.comb: p for p in quotient_Lhat(s, v, mode)}
        chk = AppendixCheck(s, v, len(rows), len(reps))
        hit = set()
        for row in rows:
            p = Profile(s, row["profile"])
            try:
                c = canonical_in_bucket(p, mode).comb
            except ValueError:
                chk.missing.append(row["number"])
                continue
            if c in hit:
                chk.bad_rows.append((row["number"], "duplicate orbit"))
            hit.add(c)
            if p.e != row["e"]:
                chk.bad_rows.append((row["number"], f"e {p.e} != {row['e']}"))
            if (p.ptype == "II") != row["type2"]:
                chk.bad_rows.append((row["number"], f"type {p.ptype}"))
        chk.extra = [reps[c] for c in reps if c not in hit]
        out.append(chk)
    return out
