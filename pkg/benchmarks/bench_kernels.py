"""Compare the numba and numpy closure kernels on random inverse-closed partitions.

    python3 benchmarks/bench_kernels.py [--group Z2xZ6] [--reps 2000]
"""
import argparse
import time

import numpy as np

from schurkit import _kernels
from schurkit.enumeration import all_schur_rings
from schurkit.groups import parse_group


def random_labels(G, rng, r):
    inv = G.inv
    labels = np.full(G.order, -1, dtype=np.int64)
    labels[0] = 0
    for g in range(1, G.order):
        if labels[g] < 0:
            labels[g] = labels[inv[g]] = rng.integers(1, r)
    _, labels = np.unique(labels, return_inverse=True)
    return labels.astype(np.int64)


def bench(fn, cases, mul):
    fn(cases[0][0], mul, cases[0][1])  # warm-up, triggers compilation
    t0 = time.perf_counter()
    hits = sum(bool(fn(lab, mul, r)) for lab, r in cases)
    return time.perf_counter() - t0, hits


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default="Z2xZ6")
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    G = parse_group(args.group)
    rng = np.random.default_rng(args.seed)
    cases = []
    for _ in range(args.reps):
        lab = random_labels(G, rng, rng.integers(2, G.order + 1))
        cases.append((lab, int(lab.max()) + 1))
    mul = G.mul

    print(f"group {G}, {args.reps} random partitions")
    t_np, h_np = bench(_kernels.is_closed_numpy, cases, mul)
    print(f"  numpy  is_closed: {t_np * 1e6 / args.reps:8.1f} us/call  ({h_np} closed)")
    if _kernels.is_closed_numba is not None:
        t_nb, h_nb = bench(_kernels.is_closed_numba, cases, mul)
        print(f"  numba  is_closed: {t_nb * 1e6 / args.reps:8.1f} us/call  ({h_nb} closed)")
        assert h_nb == h_np
        print(f"  speedup: {t_np / t_nb:.1f}x")
    else:
        print("  numba unavailable or disabled")

    t0 = time.perf_counter()
    res = all_schur_rings(G)
    print(f"  all_schur_rings({G}) with {_kernels.BACKEND}: {res.count} rings, "
          f"{res.leaves} leaves, {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
