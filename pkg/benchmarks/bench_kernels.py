"""Compare the compiled and pure-Python kernels on the workloads the pipeline runs.

    python benchmarks/bench_kernels.py [--repeat N] [--flat-rows K]
"""
from __future__ import annotations

import argparse
import statistics
import time

from boxclique import _pure
from boxclique.pipeline import _flat_inputs, build_Mc, named
from boxclique.profiles import ALPHA_CAP, ProfileSystem

try:
    from boxclique import _kernels
except ImportError:  # pragma: no cover
    _kernels = None


def profile_args(s: int, v: int):
    ps = ProfileSystem(s, v)
    fams = ps.families()
    fam_of_var = [[f for f, fam in enumerate(fams) if x in fam] for x in ps.variables]
    return (fam_of_var, ps.lower_bounds(), len(fams), ALPHA_CAP, v)


def triple_args(name: str):
    from boxclique.core import adjacent

    lam = named(name).comb
    xs = list(lam.elements())
    ys = zs = lam.support()
    pairs = [(y, z) for y in ys for z in zs]
    return ([[adjacent(a, b) for b in xs] for a in xs],
            [[adjacent(a[0], b[0]) or adjacent(a[1], b[1]) for b in pairs] for a in pairs],
            [i for i in range(len(ys)) for _ in zs], [j for _ in ys for j in range(len(zs))],
            [lam.mult(y) for y in ys], [lam.mult(z) for z in zs],
            [i - 1 if i and xs[i - 1] == xs[i] else -1 for i in range(len(xs))], 0)


def bench(fn, args, kwargs, repeat):
    times, res = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), res


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--flat-rows", type=int, default=24, help="rows of Mc(12) scanned by flat_search")
    a = ap.parse_args(argv)
    flat_in = _flat_inputs(build_Mc(12))
    work = [
        ("enumerate_profiles L(5,12)", "enumerate_profiles", profile_args(5, 12), {}),
        ("enumerate_profiles L(6,13)", "enumerate_profiles", profile_args(6, 13), {}),
        ("solve_triple club^3", "solve_triple", triple_args("club"), {}),
        ("solve_triple spade^3", "solve_triple", triple_args("spade"), {}),
        (f"flat_search Mc(12)[:{a.flat_rows}]", "flat_search", flat_in, {"q_lo": 0, "q_hi": a.flat_rows}),
    ]
    print(f"{'workload':34} {'pure [s]':>10} {'cython [s]':>11} {'speed-up':>9}  same")
    for label, fn, args, kw in work:
        tp, rp = bench(getattr(_pure, fn), args, kw, a.repeat)
        if _kernels is None:
            print(f"{label:34} {tp:10.4f} {'n/a':>11}")
            continue
        tc, rc = bench(getattr(_kernels, fn), args, kw, a.repeat)
        same = sorted(rp) == sorted(rc)
        print(f"{label:34} {tp:10.4f} {tc:11.4f} {tp / tc:9.1f}  {same}")


if __name__ == "__main__":
    main()
