"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time
from fractions import Fraction

from tricensus import kernels
from tricensus.bounds import CoverInstance, _candidates, _symbol_groups
from tricensus.generators import lattice_points, lattice_sq_norm
from tricensus.search import _int_sq_matrix, grid_values


def cover_workload(n, m, bound):
    inst = CoverInstance.distinct_pairs(n, range(1, m + 1))
    masks = [mk for _, mk in _candidates(inst)]
    groups = _symbol_groups(inst) if bound == "symbol" else ()
    E = len(inst.pairs)
    special = sum(1 << i for i, (a, b) in enumerate(inst.pairs) if a == b) if bound == "symbol" else 0
    # refuting one below the optimum is the expensive step
    from tricensus.bounds import solve_cover
    limit = solve_cover(inst, bound=bound).size - 1

    def run(mod):
        return mod.cover_search(masks, E, limit, 0, inst.is_symmetric, groups, 2, 3, special)[1]
    return run


def subset_workload(k, radius):
    pts = lattice_points("hexagon", radius)
    ids = {}
    dist = [[ids.setdefault(lattice_sq_norm(a - c, b - e), len(ids)) for c, e in pts] for a, b in pts]
    return lambda mod: mod.max_k_distance_subset(dist, k)[2]


def census_workload(d):
    vals = grid_values(Fraction(1, 2), 2)
    base = []
    for i in range(d):
        for s in (2, -2):
            p = [0] * d
            p[i] = s
            base.append(tuple(p))
    from itertools import product
    sets = [_int_sq_matrix(base + [tuple(int(2 * v) for v in q)]) for q in product(vals, repeat=d)
            if tuple(int(2 * v) for v in q) not in base]
    return lambda mod: sum(mod.census_counts(sq)[1] for sq in sets)


WORKLOADS = [
    ("cover n=8 (count bound)", lambda: cover_workload(8, 0, "count")),
    ("cover n=7 m=7 (count bound)", lambda: cover_workload(7, 7, "count")),
    ("cover n=8 m=2 (symbol bound)", lambda: cover_workload(8, 2, "symbol")),
    ("lattice k=5 hexagon r=3", lambda: subset_workload(5, 3)),
    ("census grid d=4 (6553 sets)", lambda: census_workload(4)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernels.implementations()
    names = sorted(impls)
    print(f"{'workload':34s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for title, make in WORKLOADS:
        run = make()
        times, results = {}, {}
        for name in names:
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[name] = run(impls[name])
                best = min(best, time.perf_counter() - t)
            times[name] = best
        if len(set(results.values())) != 1:
            raise SystemExit(f"{title}: backends disagree {results}")
        speed = f"{times['python'] / times['cython']:10.1f}x" if "cython" in times else ""
        print(f"{title:34s}" + "".join(f"{times[n]:11.4f}s" for n in names) + speed)


if __name__ == "__main__":
    main()
