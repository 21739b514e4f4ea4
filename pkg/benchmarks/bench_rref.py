"""Compare the numba kernel against the numpy fallback on the workload that
dominates real usage: many small RREF computations mod p.

Run:  python3 benchmarks/bench_rref.py [--sizes 6,12,24] [--reps 2000]
"""

import argparse
import random
import time

import numpy as np

from liesc import kernels


def make_batch(rng, n, count, p):
    return [np.array([[rng.randrange(p) for _ in range(n)] for _ in range(n)],
                     dtype=np.int64) for _ in range(count)]


def run(fn, batch, p):
    t0 = time.perf_counter()
    for a in batch:
        fn(a.copy(), p)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="4,8,16,32")
    ap.add_argument("--reps", type=int, default=2000)
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if kernels._rref_modp_numba is None:
        print("numba backend unavailable (LIESC_BACKEND=numpy or import failure); "
              "benchmarking the numpy fallback only")

    rng = random.Random(0)
    print(f"{args.reps} matrices per size, entries mod {args.p}")
    header = f"{'n':>4} {'numpy (s)':>12}"
    if kernels._rref_modp_numba is not None:
        header += f" {'numba (s)':>12} {'speedup':>9}"
    print(header)
    for n in sizes:
        batch = make_batch(rng, n, args.reps, args.p)
        t_np = run(kernels._rref_modp_numpy, batch, args.p)
        line = f"{n:>4} {t_np:>12.4f}"
        if kernels._rref_modp_numba is not None:
            kernels._rref_modp_numba(batch[0].copy(), args.p)  # warm up / compile
            t_nb = run(kernels._rref_modp_numba, batch, args.p)
            line += f" {t_nb:>12.4f} {t_np / t_nb:>8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
