"""Time the brute-force state-sum kernel: numba against plain numpy.

    python benchmarks/bench_statesum.py [--sizes 8 12 16] [--repeat 3]
"""

import argparse
import time

import numpy as np

from linkinv import _kernels
from linkinv.families import braid_closure


def pd_array(d):
    labels = sorted({e for x in d.crossings for e in x})
    idx = {e: i for i, e in enumerate(labels)}
    return np.array([[idx[e] for e in x] for x in d.crossings], dtype=np.int64), len(labels)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 14, 16, 18])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (or LINKINV_DISABLE_NUMBA set); numpy only")
    else:
        warm, n = pd_array(braid_closure([1, -2, 1]))
        _kernels.state_histogram(warm, n, backend="numba")  # compile outside the timings
    print(f"{'crossings':>9} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for size in args.sizes:
        word = [(1, -2, 3)[k % 3] * (1 if k % 2 else -1) for k in range(size)]
        pd, n = pd_array(braid_closure(word, 4))
        t_np, h_np = best_of(lambda: _kernels.state_histogram(pd, n, backend="numpy"), args.repeat)
        if _kernels.HAVE_NUMBA:
            t_nb, h_nb = best_of(lambda: _kernels.state_histogram(pd, n, backend="numba"), args.repeat)
            assert np.array_equal(h_np, h_nb)
            print(f"{size:>9} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{size:>9} {t_np:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
