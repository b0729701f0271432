"""Compare the numba kernels against the pure-numpy fallback in-process.

Run:  python3 benchmarks/benchmark_backends.py
Both implementations are importable side by side regardless of the
SUMSET_NO_NUMBA flag, so this measures the same build.
"""

import math
import time

import numpy as np

from sumsetrange import _kernels


def bench(label, fn, repeats=5):
    fn()  # warm (JIT compile / cache touch)
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<14} {best * 1000:10.2f} ms")
    return best


def main():
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba not installed; nothing to compare")

    cases = []

    elems = np.array([0, 1, 4, 9, 17, 33, 60, 100], dtype=np.int64)
    cases.append((
        "hfold_mask_size(k=8, d=100, h=5) x2000",
        lambda: [_kernels.hfold_mask_size_np(elems, 5) for _ in range(2000)],
        lambda: [_kernels.hfold_mask_size_jit(elems, 5) for _ in range(2000)],
    ))

    sparse = np.array([0, 1, 6, 36, 216, 1296, 7776], dtype=np.int64)
    buf = np.empty(math.comb(5 + 6, 5), dtype=np.int64)
    cases.append((
        "multiset_size(k=7, h=5) x2000",
        lambda: [_kernels.multiset_size_np(sparse, 5) for _ in range(2000)],
        lambda: [_kernels.multiset_size_jit(sparse, 5, buf) for _ in range(2000)],
    ))

    def scan(np_impl):
        h, k, d = 4, 6, 16
        ach = np.zeros(h * d + 2, dtype=np.uint8)
        wit = np.full((h * d + 2, k), -1, dtype=np.int64)
        impl = _kernels.scan_diameter_np if np_impl else _kernels.scan_diameter_jit
        impl(k, d, h, ach, wit, True, True)

    cases.append((
        "scan_diameter(k=6, d=16, h=4)",
        lambda: scan(True),
        lambda: scan(False),
    ))

    def atlas(np_impl):
        k, hmax, d = 6, 3, 16
        maxes = [math.comb(i + k - 1, i) + 1 for i in range(2, hmax + 1)]
        strides = np.array([1, maxes[0]], dtype=np.int64)
        seen = np.zeros(maxes[0] * maxes[1], dtype=np.uint8)
        out_t = np.empty((4096, hmax - 1), dtype=np.int64)
        out_w = np.empty((4096, k), dtype=np.int64)
        impl = _kernels.atlas_diameter_np if np_impl else _kernels.atlas_diameter_jit
        impl(k, d, hmax, seen, strides, out_t, out_w)

    cases.append((
        "atlas_diameter(k=6, d=16)",
        lambda: atlas(True),
        lambda: atlas(False),
    ))

    print(f"backend selected at import: {_kernels.BACKEND}\n")
    for name, np_fn, jit_fn in cases:
        print(name)
        t_np = bench("numpy", np_fn)
        t_jit = bench("numba", jit_fn)
        print(f"  {'speedup':<14} {t_np / t_jit:10.1f}x\n")


if __name__ == "__main__":
    main()
