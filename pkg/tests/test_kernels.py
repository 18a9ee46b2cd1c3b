"""The compiled kernels agree with the pure-Python reference and with brute force."""
import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxclique import _pure, kernels
from boxclique.core import Box, Combination, interval_graph, is_clique, project
from boxclique.pipeline import _flat_inputs, solve_profiles

_kernels = pytest.importorskip("boxclique._kernels")


@st.composite
def systems(draw):
    n = draw(st.integers(1, 6))
    nfam = draw(st.integers(1, 4))
    fam_of_var = [sorted(draw(st.sets(st.integers(0, nfam - 1), max_size=nfam))) for _ in range(n)]
    lower = draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    return fam_of_var, lower, nfam, draw(st.integers(1, 4)), draw(st.integers(0, 8))


def _brute_profiles(fam_of_var, lower, nfam, cap, total):
    out = []
    for k in itertools.product(range(total + 1), repeat=len(lower)):
        if sum(k) != total or any(a < b for a, b in zip(k, lower)):
            continue
        load = [0] * nfam
        for i, ki in enumerate(k):
            for f in fam_of_var[i]:
                load[f] += ki
        if max(load, default=0) <= cap:
            out.append(k)
    return sorted(out)


@settings(max_examples=300, deadline=None)
@given(systems())
def test_enumerate_profiles(sys_):
    pure = _pure.enumerate_profiles(*sys_)
    assert pure == list(_kernels.enumerate_profiles(*sys_))
    assert sorted(pure) == _brute_profiles(*sys_)


@st.composite
def triples(draw):
    s = draw(st.integers(1, 3))
    vs = interval_graph(s)
    n = draw(st.integers(1, 4))
    return tuple(Combination(draw(st.lists(st.sampled_from(vs), min_size=n, max_size=n))) for _ in range(3))


def _brute_cliques(g1, g2, g3):
    xs, ys, zs = list(g1.elements()), list(g2.elements()), list(g3.elements())
    out = set()
    for py in itertools.permutations(ys):
        for pz in itertools.permutations(zs):
            fam = [Box(t) for t in zip(xs, py, pz)]
            if is_clique(fam):
                out.add(tuple(sorted(fam)))
    return sorted(out)


def _solve_with(impl, g1, g2, g3):
    saved = kernels.solve_triple
    kernels.solve_triple = impl.solve_triple
    try:
        return solve_profiles(g1, g2, g3)
    finally:
        kernels.solve_triple = saved


@settings(max_examples=300, deadline=None)
@given(triples())
def test_solve_triple(gs):
    pure = _solve_with(_pure, *gs)
    assert pure == _solve_with(_kernels, *gs)
    assert sorted(pure) == _brute_cliques(*gs)
    for cl in pure:
        assert all(project(Combination(cl), k) == gs[k] for k in range(3))


def test_solve_triple_limit():
    g = Combination(interval_graph(3))
    assert len(_solve_with(_pure, g, g, g)) == len(_solve_with(_kernels, g, g, g))
    assert len(solve_profiles(g, g, g, limit=1)) <= 1


def test_flat_search_agrees(mc12):
    inputs = _flat_inputs(mc12)
    for lo, hi in ((0, 6), (100, 104), (300, 303)):
        a = sorted(_pure.flat_search(*inputs, q_lo=lo, q_hi=hi))
        b = sorted(_kernels.flat_search(*inputs, q_lo=lo, q_hi=hi))
        assert a == b


def test_backend_selection():
    assert kernels.BACKEND == "cython"
    env = dict(os.environ, BOXCLIQUE_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from boxclique import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"

