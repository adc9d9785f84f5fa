"""Compare the numba kernels with the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Both paths are called directly, so the HALIN_PACKER_DISABLE_JIT flag does
not matter here. Compilation happens in a warm-up call before timing.
"""

import argparse
import time

import numpy as np

from halin_packer import SPacking, all_pairs_distances, named_instance, random_cubic_halin
from halin_packer import kernels
from halin_packer._jit import HAVE_NUMBA
from halin_packer.exact_solver import _symmetry_links, search_order


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bfs_case(num_internal):
    g = random_cubic_halin(num_internal, 1).graph
    indptr, indices = g.csr()
    return (
        f"bfs n={g.order}",
        lambda: kernels.bfs_distances_jit(indptr, indices, g.order),
        lambda: kernels.bfs_distances_py(indptr, indices, g.order),
    )


def search_case(label, g, schedule):
    dist = np.ascontiguousarray(all_pairs_distances(g).dist)
    s = np.asarray(schedule.s, dtype=np.int64)
    order = search_order(dist, int(s.max()))
    prev = _symmetry_links(s)

    def run(fn):
        n = g.order
        state = np.zeros(2, dtype=np.int64)
        fn(order, dist, s, prev, np.full(n, -1, dtype=np.int64), np.zeros(n + 1, dtype=np.int64),
           np.zeros(len(s), dtype=np.int64), state, 10**9, True)
        return state[1]

    return (
        f"search {label} {schedule}",
        lambda: run(kernels.search_jit),
        lambda: run(kernels.search_py),
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not HAVE_NUMBA:
        print("numba is not installed; both columns time the same Python code")

    cases = [bfs_case(m) for m in (50, 200, 500)]
    cases.append(search_case("G1", named_instance("G1").graph, SPacking((1, 2, 3, 4))))
    cases.append(search_case("G1", named_instance("G1").graph, SPacking((1, 1, 3, 3))))
    big = random_cubic_halin(32, 2).graph
    cases.append(search_case(f"n{big.order}", big, SPacking((1, 2, 3, 4, 5, 6))))

    print(f"{'case':<34}{'jit ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for label, jit, py in cases:
        tj, tp = best_of(jit, args.repeat), best_of(py, args.repeat)
        print(f"{label:<34}{1000 * tj:>12.3f}{1000 * tp:>12.3f}{tp / tj:>9.1f}x")


if __name__ == "__main__":
    main()
