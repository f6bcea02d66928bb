"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Both backends run on the same inputs; results are checked for equality
before any timing is reported.
"""

import argparse
import random
import sys
import time

import numpy as np

from centrality_lab import _kernels
from centrality_lab.graph import Graph
from centrality_lab.isomorphism import _group_permutations, _slot_positions


def random_adjacency(n, p, rng):
    mask = 0
    for slot in range(n * (n - 1) // 2):
        if rng.random() < p:
            mask |= 1 << slot
    return Graph.from_mask(n, mask).adjacency_matrix()


def cases(seed=0):
    rng = random.Random(seed)
    dm = [random_adjacency(n, 0.3, rng) for n in (8, 32, 128)]
    # a connected graph for power iteration: cycle plus random chords
    pi = []
    for n in (8, 32, 128):
        a = random_adjacency(n, 0.1, rng)
        for u in range(n):
            a[u, (u + 1) % n] = a[(u + 1) % n, u] = 1
        pi.append(a)
    # worst case for the canonical-code kernel: regular-ish graphs with one degree class
    mr = []
    for n in (5, 6, 7):
        a = np.zeros((n, n), dtype=np.uint8)
        for u in range(n):
            a[u, (u + 1) % n] = a[(u + 1) % n, u] = 1
        rows = np.arange(n, dtype=np.int64)[_group_permutations((n,))]
        pa, pb = _slot_positions(n)
        mr.append((a, rows, pa, pb))
    return dm, pi, mr


def timeit(fn, args, repeat):
    fn(*args)  # warm-up (and numba compilation)
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args(argv)
    if "numba" not in _kernels.IMPLEMENTATIONS:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1
    np_impl = _kernels.IMPLEMENTATIONS["numpy"]
    nb_impl = _kernels.IMPLEMENTATIONS["numba"]
    dm, pi, mr = cases()
    jobs = []
    for a in dm:
        jobs.append(("distance_matrix", f"n={a.shape[0]}", (a,)))
    for a in pi:
        jobs.append(("power_iteration", f"n={a.shape[0]}", (a, 1e-12, 100_000)))
    for a, rows, pa, pb in mr:
        jobs.append(("min_relabel_code", f"n={a.shape[0]} perms={rows.shape[0]}", (a, rows, pa, pb)))

    print(f"{'kernel':<18} {'case':<18} {'numpy us':>10} {'numba us':>10} {'speedup':>8}")
    for name, label, fargs in jobs:
        r_np, r_nb = np_impl[name](*fargs), nb_impl[name](*fargs)
        if name == "power_iteration":
            assert np.allclose(r_np[0], r_nb[0], atol=1e-10), name
        else:
            assert np.array_equal(np.asarray(r_np), np.asarray(r_nb)), name
        t_np = timeit(np_impl[name], fargs, args.repeat)
        t_nb = timeit(nb_impl[name], fargs, args.repeat)
        print(f"{name:<18} {label:<18} {t_np * 1e6:>10.1f} {t_nb * 1e6:>10.1f} {t_np / t_nb:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
