"""Compare the numba and numpy enumeration kernels.

    python benchmarks/bench_oracle.py --n-min 7 --n-max 10 --repeat 3
"""

import argparse
import time

import numpy as np

from rencontres import _kernels


def best_of(fn, n, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(n)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-min", type=int, default=7)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("numpy", _kernels.tally_joint_numpy)]
    if _kernels.HAVE_NUMBA:
        _kernels.tally_joint_numba(3)  # compile outside the timings
        backends.append(("numba", _kernels.tally_joint_numba))

    print(f"{'n':>3} | " + " | ".join(f"{name:>10}" for name, _ in backends) + " | speedup")
    for n in range(args.n_min, args.n_max + 1):
        results = [best_of(fn, n, args.repeat) for _, fn in backends]
        ref = results[0][1]
        assert all(np.array_equal(ref, out) for _, out in results), "backends disagree"
        cols = " | ".join(f"{t * 1e3:8.1f}ms" for t, _ in results)
        speedup = f"{results[0][0] / results[-1][0]:6.1f}x" if len(results) > 1 else "   n/a"
        print(f"{n:>3} | {cols} | {speedup}")


if __name__ == "__main__":
    main()
