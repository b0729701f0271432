"""Explicit set families: the excluded triangle, filling sets, dense/sparse
building blocks, the parameterized disjoint-union family, and the fold-3
path machinery (path families, closed-form g values, and the two
one-element extension maps)."""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import core, series
from .core import FillingInfeasibleError


# ---------------------------------------------------------------------------
# excluded triangle and bounding interval
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaSet:
    h: int
    k: int
    intervals: tuple  # (lo, hi) per ell, only non-empty rows
    excluded: tuple   # sorted flat values

    def __contains__(self, v):
        return v in set(self.excluded)


def delta_set(h: int, k: int) -> DeltaSet:
    """Union over ell in [0, min(h,k)-3] of [m+ell*h+1, m+ell*h+(h-2-ell)]."""
    if h < 1 or k < 1:
        raise ValueError("need h, k >= 1")
    m = h * k - h + 1
    intervals = []
    values = []
    for ell in range(min(h, k) - 2):
        lo = m + ell * h + 1
        hi = m + ell * h + (h - 2 - ell)
        if hi >= lo:
            intervals.append((lo, hi))
            values.extend(range(lo, hi + 1))
    ds = DeltaSet(h, k, tuple(intervals), tuple(sorted(values)))
    if k >= h >= 3:
        assert len(ds.excluded) == math.comb(h - 1, 2)
    return ds


def bounding_interval(h: int, k: int) -> tuple:
    """[hk-h+1, C(h+k-1, h)]; both endpoints are always attained."""
    if h < 1 or k < 1:
        raise ValueError("need h, k >= 1")
    return h * k - h + 1, math.comb(h + k - 1, h)


def gap_threshold(h: int, k: int) -> int:
    """2hk-3h-k+3: every set of diameter >= 2k-3 has |hA| at least this,
    so diameters <= 2k-4 decide membership completely below it."""
    return 2 * h * k - 3 * h - k + 3


# ---------------------------------------------------------------------------
# filling sets
# ---------------------------------------------------------------------------

def _filling_elements(h: int, d: int, k: int) -> list:
    """An (h,d)-filling core with at most k elements, or raise.

    Desk-mode version of the recursive construction: each level checks its
    own feasibility instead of assuming the asymptotic hypothesis.
    """
    if d < 1 or k < 1:
        raise FillingInfeasibleError("filling infeasible: empty budget")
    if d <= k - 1:
        return list(range(d + 1))
    if h == 1:
        raise FillingInfeasibleError("filling infeasible: 1A = [0,d] forces A = [0,d]")
    if h == 2:
        dt = math.isqrt(d)
        a = set(range(dt + 1))
        a.update(i * dt for i in range(d // dt + 1))
        a.update(range(d - dt, d + 1))
        if len(a) > k:
            raise FillingInfeasibleError("filling infeasible")
        return sorted(a)
    # an (h-1,d)-filling set is (h,d)-filling; prefer it when it fits
    try:
        return _filling_elements(h - 1, d, k)
    except FillingInfeasibleError:
        pass
    dt = (4 * d) // k
    kt = -(-k // 4)
    if dt < 1:
        raise FillingInfeasibleError("filling infeasible")
    if dt <= kt - 1:
        sub = list(range(dt + 1))
    else:
        sub = _filling_elements(h - 1, dt, kt)
    a = set(sub)
    a.update(i * dt for i in range(d // dt + 1))
    a.update(d - dt + x for x in sub)
    if len(a) > k:
        raise FillingInfeasibleError("filling infeasible")
    return sorted(a)


def _pad_to(a: list, k: int, d: int) -> list:
    """Add the smallest numbers in [0,d] \\ a until |a| = k."""
    have = set(a)
    need = k - len(have)
    if need < 0 or len(have) + (d + 1 - len(have)) < k:
        raise FillingInfeasibleError("filling infeasible: cannot pad to size k")
    x = 0
    while need:
        if x not in have:
            have.add(x)
            need -= 1
        x += 1
    return sorted(have)


def _is_filling(a, h: int, d: int) -> bool:
    return core.sumset_size(a, h) == h * d + 1


def build_filling_set(h: int, d: int, k: int) -> tuple:
    """A of size k inside [0,d] with hA = [0,hd], assert-checked."""
    if h < 2:
        raise ValueError("need h >= 2")
    if k > d + 1:
        raise FillingInfeasibleError("filling infeasible: k > d + 1")
    a = _pad_to(_filling_elements(h, d, k), k, d)
    if not _is_filling(a, h, d):
        raise FillingInfeasibleError("filling infeasible: construction did not close")
    return tuple(a)


def shifted_filling_family(h: int, k: int, d: int, i: int) -> tuple:
    """A = {0} u (i + B) for an (h,d)-filling B of size k-1 with [0,(h-1)i] in B.

    Then hA = {0} u [i, hi + hd], so |hA| = h(i+d) - i + 2 (assert-checked).
    """
    if not 1 <= i <= h:
        raise ValueError("need i in [1, h]")
    prefix = (h - 1) * i
    if prefix > d or k - 1 < 1:
        raise FillingInfeasibleError("filling infeasible: [0,(h-1)i] exceeds [0,d]")
    # adding elements of [0,d] preserves the filling property
    b = set(range(prefix + 1))
    b.update(_filling_elements(h, d, k - 1))
    if len(b) > k - 1:
        raise FillingInfeasibleError("filling infeasible: prefix does not fit")
    b = _pad_to(sorted(b), k - 1, d)
    a = tuple([0] + [i + x for x in b])
    expect = h * (i + d) - i + 2
    got = core.sumset_size(a, h)
    if got != expect:
        raise AssertionError(f"shifted filling size {got} != {expect}")
    return a


# ---------------------------------------------------------------------------
# dense and sparse building blocks
# ---------------------------------------------------------------------------

def dense_B(h: int, j: int, ell: int) -> tuple:
    """B_{j,ell} = [0, ell-2] u {h(ell-2)+2-j}, an AP plus one point."""
    if ell < 3:
        raise ValueError("need ell >= 3")
    s = (h - 1) * (ell - 2) + 1
    if not 1 <= j <= s:
        raise ValueError(f"j out of range [1, {s}]")
    return tuple(range(ell - 1)) + (h * (ell - 2) + 2 - j,)


def sparse_S(m: int, ell: int) -> tuple:
    """S_{m,ell} = {0, 1, m, m^2, ..., m^(ell-2)} (normalized, size ell)."""
    if m < 2 or ell < 2:
        raise ValueError("need m >= 2 and ell >= 2")
    return (0,) + tuple(m ** i for i in range(ell - 1))


def sparse_T(m: int, ell: int) -> tuple:
    """T_{m,ell} = {1, m, m^2, ..., m^(ell-1)} (not normalized, size ell)."""
    if m < 2 or ell < 2:
        raise ValueError("need m >= 2 and ell >= 2")
    return tuple(m ** i for i in range(ell))


# ---------------------------------------------------------------------------
# the parameterized disjoint-union family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    """Parameters of A = B_{j,b} u S_{3..h} u T_{2..h} (disjoint unions).

    s maps m in [3,h] to the size of the S block, t maps m in [2,h-1];
    the last block size t_h is the residual c - sum(s_m + t_{m-1}).
    """

    h: int
    k: int
    b: int
    j: int
    s: tuple = field(default=())  # s_m for m = 3..h
    t: tuple = field(default=())  # t_m for m = 2..h-1

    def __post_init__(self):
        h, k, b = self.h, self.k, self.b
        if h < 4:
            raise ValueError("family needs h >= 4")
        c = k - b
        b_hi = k - math.floor(k ** 0.7)
        if not 3 <= b <= b_hi:
            raise ValueError(f"b={b} outside [3, {b_hi}]")
        j_hi = (h - 1) * (b - 2) + 1
        if not 1 <= self.j <= j_hi:
            raise ValueError(f"j={self.j} outside [1, {j_hi}]")
        if len(self.s) != h - 2 or len(self.t) != h - 2:
            raise ValueError(f"need {h - 2} entries in each of s (m=3..h) and t (m=2..h-1)")
        s_hi = math.floor(c ** 0.9)
        t_hi = math.floor(c ** 0.8)
        for m, sm in zip(range(3, h + 1), self.s):
            if not 2 <= sm <= s_hi:
                raise ValueError(f"s_{m}={sm} outside [2, {s_hi}]")
        for m, tm in zip(range(2, h), self.t):
            if not 2 <= tm <= t_hi:
                raise ValueError(f"t_{m}={tm} outside [2, {t_hi}]")
        if self.t_last < 2:
            raise ValueError(f"residual t_{h}={self.t_last} < 2")

    @property
    def c(self) -> int:
        return self.k - self.b

    @property
    def t_last(self) -> int:
        return self.c - sum(self.s) - sum(self.t)

    @classmethod
    def minimal(cls, h: int, k: int, b: int, j: int = 1):
        return cls(h=h, k=k, b=b, j=j, s=(2,) * (h - 2), t=(2,) * (h - 2))


def family_blocks(p: FamilyParams) -> list:
    blocks = [dense_B(p.h, p.j, p.b)]
    blocks += [sparse_S(m, sm) for m, sm in zip(range(3, p.h + 1), p.s)]
    blocks += [sparse_T(m, tm) for m, tm in zip(range(2, p.h), p.t)]
    blocks.append(sparse_T(p.h, p.t_last))
    return blocks


def family_Ab_member(p: FamilyParams) -> frozenset:
    """The iterated disjoint union as a lattice set (bracketing irrelevant)."""
    blocks = family_blocks(p)
    out = core.as_lattice(blocks[0])
    for blk in blocks[1:]:
        out = core.disjoint_union(out, blk)
    return out


def family_series(p: FamilyParams, h: Optional[int] = None) -> series.TruncatedSeries:
    """F_A as the product of per-block series, avoiding the lattice blowup."""
    h = p.h if h is None else h
    out = series.series_of_set(dense_B(p.h, p.j, p.b), h)
    for m, sm in zip(range(3, p.h + 1), p.s):
        out = series.series_multiply(out, series.closed_form_S(m, sm, h))
    for m, tm in zip(range(2, p.h), p.t):
        out = series.series_multiply(out, series.closed_form_T(m, tm, h))
    return series.series_multiply(out, series.closed_form_T(p.h, p.t_last, h))


def family_size(p: FamilyParams) -> int:
    """|hA| for the family member, via the series product."""
    return family_series(p).coeffs[p.h]


# ---------------------------------------------------------------------------
# fold-3 path machinery
# ---------------------------------------------------------------------------

def _path_A(k: int, a: int) -> tuple:
    return (0,) + tuple(range(2, k)) + (k + a,)


def _path_B(k: int, b: int) -> tuple:
    return (0, 1) + tuple(range(3, k)) + (k + b,)


B2_PRIME = (0, 1, 4, 5)


def h3_path_sets(k: int) -> list:
    """The explicit vertex sequence joining (2k,3k) to (3k-2,6k-5).

    Order: A_0,B_0,...,A_{k-4},B_{k-4},A_{k-3},A_{k-2},B*_{k-2},
    A_{k-1},...,A_{2k-4},A_{2k-2}, where B* is {0,1,4,5} when k = 4.
    """
    if k < 4:
        raise ValueError("need k >= 4")
    out = []
    for a in range(k - 3):
        out.append(_path_A(k, a))
        out.append(_path_B(k, a))
    out.append(_path_A(k, k - 3))
    out.append(_path_A(k, k - 2))
    out.append(B2_PRIME if k == 4 else _path_B(k, k - 2))
    for a in range(k - 1, 2 * k - 3):
        out.append(_path_A(k, a))
    out.append(_path_A(k, 2 * k - 2))
    return out


def g_formula(kind: str, k: int, index: int) -> tuple:
    """Closed-form g(A_a) / g(B_b) = (|2A|, |3A|) for the path families."""
    if kind == "A":
        a = index
        if 0 <= a <= k - 3:
            return (2 * k + a, 3 * k + 2 * a)
        if a == k - 2:
            return (3 * k - 3, 5 * k - 5)
        if k - 1 <= a <= 2 * k - 4:
            return (3 * k - 2, 4 * k - 2 + a)
        if a == 2 * k - 2:
            return (3 * k - 2, 6 * k - 5)
        raise ValueError(f"A-family index {a} outside all cases for k={k}")
    if kind == "B":
        b = index
        if 0 <= b <= k - 4:
            return (2 * k + 1 + b, 3 * k + 1 + 2 * b)
        if b == k - 2 and k > 4:
            return (3 * k - 2, 5 * k - 4)
        raise ValueError(f"B-family index {b} outside all cases for k={k}")
    raise ValueError("kind must be 'A' or 'B'")


def g_of(a) -> tuple:
    """(|2A|, |3A|)."""
    prof = core.profile(a, 3)
    return (prof[1], prof[2])


def phi_extend(a, variant: int, check: bool = True) -> tuple:
    """A u {3d} (variant 1) or A u {3d+1} (variant 2) for normalized A.

    With k = |A| + 1: |2A_i| = |2A| + k; |3A_1| = |3A| + |2A| + k - 1;
    |3A_2| = |3A| + |2A| + k.
    """
    elems = core.normalize(a)
    if len(elems) < 2:
        raise ValueError("need |A| >= 2")
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    d = elems[-1]
    ext = elems + (3 * d + (variant - 1),)
    if check:
        k = len(ext)
        prof_a = core.profile(elems, 3)
        prof_e = core.profile(ext, 3)
        assert prof_e[1] == prof_a[1] + k
        assert prof_e[2] == prof_a[2] + prof_a[1] + k - (1 if variant == 1 else 0)
    return ext


@lru_cache(maxsize=None)
def h3_vertex_witnesses(k: int) -> dict:
    """Map (|2A|, |3A|) -> witness over the recursively constructed vertex set.

    Base: the two 3-sets {0,1,3}, {0,1,4}.  Step: the explicit path families
    plus both one-element extensions of every level-(k-1) witness.  The
    union is connected, so its |3A| values cover [3k, C(k+2,3)] entirely.
    """
    if k < 3:
        raise ValueError("need k >= 3")
    out = {}
    if k == 3:
        for a in ((0, 1, 3), (0, 1, 4)):
            out[g_of(a)] = a
        return out
    for a in h3_path_sets(k):
        out.setdefault(g_of(a), a)
    for prev in h3_vertex_witnesses(k - 1).values():
        for variant in (1, 2):
            ext = phi_extend(prev, variant, check=False)
            out.setdefault(g_of(ext), ext)
    return out
