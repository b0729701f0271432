"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The fallback is selected by setting the environment variable
``SUMSET_NO_NUMBA=1`` before import (or automatically when numba is not
installed).  Both implementations are importable side by side so the
benchmark script can compare them in-process; library code goes through
the module-level dispatch functions.

All 1-dimensional sumset work uses characteristic byte vectors over
[0, h*max(A)]: an h-fold sumset is h-1 shift-OR passes.  Sets with huge
diameter but few elements (geometric-like sets) instead enumerate the
<= C(h+k-1, h) multiset sums directly.
"""

import math
import os
from itertools import combinations, combinations_with_replacement

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but stay importable
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SUMSET_NO_NUMBA", "") not in ("1", "true", "yes")


# ---------------------------------------------------------------------------
# numpy fallback implementations
# ---------------------------------------------------------------------------

def _fold_mask_np(elems, h):
    """Byte mask of hA over [0, h*max] for a sorted array with min 0."""
    top = int(elems[-1])
    cur = np.zeros(h * top + 1, dtype=np.uint8)
    cur[elems] = 1
    cur_len = top + 1
    for _ in range(h - 1):
        nxt = np.zeros(h * top + 1, dtype=np.uint8)
        for e in elems:
            nxt[e:e + cur_len] |= cur[:cur_len]
        cur = nxt
        cur_len += top
    return cur[:cur_len]


def hfold_mask_size_np(elems, h):
    return int(_fold_mask_np(elems, h).sum())


def hfold_mask_profile_np(elems, h):
    """(|1A|, ..., |hA|) by accumulating S_{i+1} = S_i + A."""
    top = int(elems[-1])
    sizes = np.empty(h, dtype=np.int64)
    cur = np.zeros(h * top + 1, dtype=np.uint8)
    cur[elems] = 1
    cur_len = top + 1
    sizes[0] = len(elems)
    for fold in range(1, h):
        nxt = np.zeros(h * top + 1, dtype=np.uint8)
        for e in elems:
            nxt[e:e + cur_len] |= cur[:cur_len]
        cur = nxt
        cur_len += top
        sizes[fold] = int(cur[:cur_len].sum())
    return sizes


def multiset_size_np(elems, h):
    """|hA| by direct enumeration of the C(h+k-1, h) multiset sums."""
    return len({sum(c) for c in combinations_with_replacement([int(e) for e in elems], h)})


def scan_diameter_np(k, d, h, achieved, witness, want_witness, dedup):
    """Enumerate normalized k-sets of diameter exactly d; mark |hA| sizes.

    achieved is a uint8 array of length >= h*d + 2; witness rows are filled
    with the first set attaining each size (row of -1 means unset).
    """
    r = k - 2
    if r == 0:
        if d == 1:
            elems = np.array([0, 1], dtype=np.int64)
            s = hfold_mask_size_np(elems, h)
            if not achieved[s]:
                achieved[s] = 1
                if want_witness:
                    witness[s, :] = elems
        return
    if d - 1 < r:
        return
    for interior in combinations(range(1, d), r):
        if dedup and interior > tuple(d - a for a in reversed(interior)):
            continue
        g = d
        for a in interior:
            g = math.gcd(g, a)
            if g == 1:
                break
        if g != 1:
            continue
        elems = np.array((0,) + interior + (d,), dtype=np.int64)
        s = hfold_mask_size_np(elems, h)
        if not achieved[s]:
            achieved[s] = 1
            if want_witness:
                witness[s, :] = elems


def atlas_diameter_np(k, d, hmax, seen, strides, out_tuples, out_wits):
    """Collect new (|2A|, ..., |hmaxA|) tuples at diameter d. Returns count."""
    n_new = 0
    cap = out_tuples.shape[0]
    r = k - 2
    candidates = []
    if r == 0:
        if d == 1:
            candidates = [()]
    else:
        if d - 1 >= r:
            candidates = combinations(range(1, d), r)
    for interior in candidates:
        if interior and interior > tuple(d - a for a in reversed(interior)):
            continue
        g = d
        for a in interior:
            g = math.gcd(g, a)
            if g == 1:
                break
        if g != 1:
            continue
        elems = np.array((0,) + tuple(interior) + (d,), dtype=np.int64)
        sizes = hfold_mask_profile_np(elems, hmax)
        code = 0
        for i in range(hmax - 1):
            code += int(sizes[i + 1]) * int(strides[i])
        if not seen[code]:
            seen[code] = 1
            if n_new < cap:
                out_tuples[n_new, :] = sizes[1:]
                out_wits[n_new, :] = elems
            n_new += 1
    return n_new


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _gcd_jit(a, b):
        while b:
            a, b = b, a % b
        return a

    @njit(cache=True, nogil=True)
    def _hfold_size_jit(elems, h, buf_a, buf_b):
        k = elems.shape[0]
        top = elems[k - 1]
        total = h * top + 1
        for i in range(total):
            buf_a[i] = 0
        for i in range(k):
            buf_a[elems[i]] = 1
        cur_len = top + 1
        src = buf_a
        dst = buf_b
        for _ in range(h - 1):
            for i in range(cur_len + top):
                dst[i] = 0
            for j in range(k):
                off = elems[j]
                for i in range(cur_len):
                    dst[i + off] |= src[i]
            cur_len += top
            src, dst = dst, src
        count = 0
        for i in range(cur_len):
            count += src[i]
        return count

    @njit(cache=True, nogil=True)
    def hfold_mask_size_jit(elems, h):
        top = elems[elems.shape[0] - 1]
        buf_a = np.zeros(h * top + 1, dtype=np.uint8)
        buf_b = np.zeros(h * top + 1, dtype=np.uint8)
        return _hfold_size_jit(elems, h, buf_a, buf_b)

    @njit(cache=True, nogil=True)
    def hfold_mask_profile_jit(elems, h):
        k = elems.shape[0]
        top = elems[k - 1]
        sizes = np.empty(h, dtype=np.int64)
        buf_a = np.zeros(h * top + 1, dtype=np.uint8)
        buf_b = np.zeros(h * top + 1, dtype=np.uint8)
        for i in range(k):
            buf_a[elems[i]] = 1
        cur_len = top + 1
        sizes[0] = k
        src = buf_a
        dst = buf_b
        for fold in range(1, h):
            for i in range(cur_len + top):
                dst[i] = 0
            for j in range(k):
                off = elems[j]
                for i in range(cur_len):
                    dst[i + off] |= src[i]
            cur_len += top
            src, dst = dst, src
            count = 0
            for i in range(cur_len):
                count += src[i]
            sizes[fold] = count
        return sizes

    @njit(cache=True, nogil=True)
    def multiset_size_jit(elems, h, sums_buf):
        k = elems.shape[0]
        idx = np.zeros(h, dtype=np.int64)
        n = 0
        while True:
            s = 0
            for j in range(h):
                s += elems[idx[j]]
            sums_buf[n] = s
            n += 1
            j = h - 1
            while j >= 0 and idx[j] == k - 1:
                j -= 1
            if j < 0:
                break
            v = idx[j] + 1
            for t in range(j, h):
                idx[t] = v
        sub = np.sort(sums_buf[:n])
        count = 1
        for i in range(1, n):
            if sub[i] != sub[i - 1]:
                count += 1
        return count

    @njit(cache=True, nogil=True)
    def scan_diameter_jit(k, d, h, achieved, witness, want_witness, dedup):
        r = k - 2
        buf_a = np.zeros(h * d + 1, dtype=np.uint8)
        buf_b = np.zeros(h * d + 1, dtype=np.uint8)
        elems = np.empty(k, dtype=np.int64)
        elems[0] = 0
        elems[k - 1] = d
        if r == 0:
            if d == 1:
                s = _hfold_size_jit(elems, h, buf_a, buf_b)
                if achieved[s] == 0:
                    achieved[s] = 1
                    if want_witness:
                        for i in range(k):
                            witness[s, i] = elems[i]
            return
        if d - 1 < r:
            return
        idx = np.empty(r, dtype=np.int64)
        for i in range(r):
            idx[i] = i + 1
        while True:
            keep = True
            if dedup:
                for i in range(r):
                    a = idx[i]
                    b = d - idx[r - 1 - i]
                    if a < b:
                        break
                    if a > b:
                        keep = False
                        break
            if keep:
                g = d
                for i in range(r):
                    g = _gcd_jit(g, idx[i])
                    if g == 1:
                        break
                if g == 1:
                    for i in range(r):
                        elems[i + 1] = idx[i]
                    s = _hfold_size_jit(elems, h, buf_a, buf_b)
                    if achieved[s] == 0:
                        achieved[s] = 1
                        if want_witness:
                            for i in range(k):
                                witness[s, i] = elems[i]
            j = r - 1
            while j >= 0 and idx[j] == d - 1 - (r - 1 - j):
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for t in range(j + 1, r):
                idx[t] = idx[t - 1] + 1

    @njit(cache=True, nogil=True)
    def atlas_diameter_jit(k, d, hmax, seen, strides, out_tuples, out_wits):
        n_new = 0
        cap = out_tuples.shape[0]
        r = k - 2
        buf_a = np.zeros(hmax * d + 1, dtype=np.uint8)
        buf_b = np.zeros(hmax * d + 1, dtype=np.uint8)
        elems = np.empty(k, dtype=np.int64)
        elems[0] = 0
        elems[k - 1] = d
        sizes = np.empty(hmax, dtype=np.int64)
        if r == 0:
            if d != 1:
                return 0
            idx = np.empty(0, dtype=np.int64)
        else:
            if d - 1 < r:
                return 0
            idx = np.empty(r, dtype=np.int64)
            for i in range(r):
                idx[i] = i + 1
        while True:
            keep = True
            for i in range(r):
                a = idx[i]
                b = d - idx[r - 1 - i]
                if a < b:
                    break
                if a > b:
                    keep = False
                    break
            if keep:
                g = d
                for i in range(r):
                    g = _gcd_jit(g, idx[i])
                    if g == 1:
                        break
                if g == 1:
                    for i in range(r):
                        elems[i + 1] = idx[i]
                    # incremental profile
                    top = d
                    for i in range(hmax * top + 1):
                        buf_a[i] = 0
                    for i in range(k):
                        buf_a[elems[i]] = 1
                    cur_len = top + 1
                    sizes[0] = k
                    src = buf_a
                    dst = buf_b
                    for fold in range(1, hmax):
                        for i in range(cur_len + top):
                            dst[i] = 0
                        for j2 in range(k):
                            off = elems[j2]
                            for i in range(cur_len):
                                dst[i + off] |= src[i]
                        cur_len += top
                        src, dst = dst, src
                        count = 0
                        for i in range(cur_len):
                            count += src[i]
                        sizes[fold] = count
                    code = 0
                    for i in range(hmax - 1):
                        code += sizes[i + 1] * strides[i]
                    if seen[code] == 0:
                        seen[code] = 1
                        if n_new < cap:
                            for i in range(hmax - 1):
                                out_tuples[n_new, i] = sizes[i + 1]
                            for i in range(k):
                                out_wits[n_new, i] = elems[i]
                        n_new += 1
            if r == 0:
                break
            j = r - 1
            while j >= 0 and idx[j] == d - 1 - (r - 1 - j):
                j -= 1
            if j < 0:
                break
            idx[j] += 1
            for t in range(j + 1, r):
                idx[t] = idx[t - 1] + 1
        return n_new


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

def _as_elems(seq):
    a = np.asarray(seq, dtype=np.int64)
    return a


if USE_NUMBA:
    BACKEND = "numba"

    def hfold_mask_size(elems, h):
        return int(hfold_mask_size_jit(_as_elems(elems), h))

    def hfold_mask_profile(elems, h):
        return hfold_mask_profile_jit(_as_elems(elems), h)

    def multiset_size(elems, h):
        k = len(elems)
        buf = np.empty(math.comb(h + k - 1, h), dtype=np.int64)
        return int(multiset_size_jit(_as_elems(elems), h, buf))

    scan_diameter = scan_diameter_jit
    atlas_diameter = atlas_diameter_jit
else:
    BACKEND = "numpy"

    def hfold_mask_size(elems, h):
        return hfold_mask_size_np(_as_elems(elems), h)

    def hfold_mask_profile(elems, h):
        return hfold_mask_profile_np(_as_elems(elems), h)

    def multiset_size(elems, h):
        return multiset_size_np(_as_elems(elems), h)

    scan_diameter = scan_diameter_np
    atlas_diameter = atlas_diameter_np


def warmup():
    """Trigger JIT compilation of every kernel (no-op on the numpy path)."""
    if not USE_NUMBA:
        return
    elems = np.array([0, 1, 3], dtype=np.int64)
    hfold_mask_size(elems, 2)
    hfold_mask_profile(elems, 3)
    multiset_size(elems, 2)
    achieved = np.zeros(8, dtype=np.uint8)
    wit = np.full((8, 3), -1, dtype=np.int64)
    scan_diameter(3, 3, 2, achieved, wit, True, True)
    seen = np.zeros(200, dtype=np.uint8)
    strides = np.array([1, 12], dtype=np.int64)
    tup = np.empty((16, 2), dtype=np.int64)
    wits = np.empty((16, 3), dtype=np.int64)
    atlas_diameter(3, 3, 3, seen, strides, tup, wits)
