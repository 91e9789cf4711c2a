"""Compare the numba and pure-numpy kernels.

    python benchmarks/bench_backends.py            # box solver, Nim d=12..20
    python benchmarks/bench_backends.py --pairs    # also the closure pair scan
"""

import argparse
import time


from latticegames import _kernels
from latticegames.bench import bench, growth_per_two
from latticegames.region_oracle import check_monoid_closure, default_budget, solve_region
from latticegames.heap_codec import nim_rules


def box(ds, reps):
    backends = ["numba", "numpy"] if _kernels.HAVE_NUMBA else ["numpy"]
    rows = bench(ds, family="nim", repetitions=reps, backends=backends)
    print(f"{'backend':8} {'d':>3} {'|G|':>5} {'seconds':>9} {'options':>11}")
    for r in rows:
        print(f"{r.backend:8} {r.d:>3} {r.moves:>5} {r.seconds:>9.4f} {r.option_evaluations:>11}")
    for b in backends:
        g = growth_per_two([r for r in rows if r.backend == b])
        print(f"{b}: growth per +2 in d = " + ", ".join(f"{x:.2f}" for x in g))
    if len(backends) == 2:
        for d in ds:
            nb, npy = (next(r for r in rows if r.backend == b and r.d == d) for b in backends)
            print(f"d={d}: numba speedup x{npy.seconds / nb.seconds:.1f}")


def pairs(reps):
    rs = nim_rules(5)
    w = (1, 2, 3, 4, 5)
    sr = solve_region(rs, w, default_budget(w))
    print(f"\nclosure scan on Nim d=5, region of {len(sr)} positions")
    for b in (["numba"] if _kernels.HAVE_NUMBA else []) + ["numpy"]:
        check_monoid_closure(sr, backend=b)
        best = min(_timed(lambda: check_monoid_closure(sr, backend=b)) for _ in range(reps))
        print(f"{b:8} {best:.4f}s")


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", default="12,14,16,18,20")
    ap.add_argument("--repetitions", type=int, default=3)
    ap.add_argument("--pairs", action="store_true")
    args = ap.parse_args()
    box([int(x) for x in args.d.split(",")], args.repetitions)
    if args.pairs:
        pairs(args.repetitions)
