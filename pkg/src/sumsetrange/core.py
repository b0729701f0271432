"""Finite integer sets, iterated sumsets, and lattice-set plumbing.

Conventions:
  * a 1-dimensional set is a strictly increasing tuple of non-negative ints;
  * a *normalized* set additionally has min 0 and gcd 1 (the affine-canonical
    representative: affine maps preserve every |iA| and the diameter);
  * a lattice set is a frozenset of equal-arity integer tuples.

0A = {0} throughout.
"""

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from . import _kernels

# Above this mask length the dense byte-vector path stops paying off and
# |hA| is computed by enumerating the C(h+k-1, h) multiset sums instead.
_MASK_CUTOFF = 1 << 22


class FillingInfeasibleError(ValueError):
    """Raised when no (h,d)-filling set with the requested size exists."""


def as_intset(raw: Iterable[int]) -> tuple:
    """Sorted, deduplicated tuple of non-negative integers."""
    elems = tuple(sorted(set(int(x) for x in raw)))
    if not elems:
        raise ValueError("empty set")
    if elems[0] < 0:
        raise ValueError("negative elements; use normalize() first")
    return elems


def normalize(raw: Iterable[int]) -> tuple:
    """Affine-canonical form: translate min to 0, divide by gcd of the rest."""
    elems = sorted(set(int(x) for x in raw))
    if not elems:
        raise ValueError("empty set")
    lo = elems[0]
    elems = [x - lo for x in elems]
    g = 0
    for x in elems:
        g = math.gcd(g, x)
    if g > 1:
        elems = [x // g for x in elems]
    return tuple(elems)


def _use_sparse(elems, h) -> bool:
    span = elems[-1] - elems[0]
    k = len(elems)
    if h * span <= 4096:
        return False
    return h * span > _MASK_CUTOFF or math.comb(h + k - 1, h) < h * span // 8


def iterated_sumset(a: Sequence[int], h: int) -> tuple:
    """Exact h-fold sumset hA = {a_1 + ... + a_h}."""
    elems = as_intset(a)
    if h < 0:
        raise ValueError("fold must be >= 0")
    if h == 0:
        return (0,)
    if h == 1:
        return elems
    return tuple(sorted({sum(c) for c in combinations_with_replacement(elems, h)}))


def sumset_size(a: Sequence[int], h: int) -> int:
    """|hA|, choosing the dense or sparse evaluation path by cost."""
    elems = as_intset(a)
    if h == 0:
        return 1
    if h == 1 or len(elems) == 1:
        return len(elems)
    lo = elems[0]
    shifted = elems if lo == 0 else tuple(x - lo for x in elems)
    if _use_sparse(shifted, h):
        return _kernels.multiset_size(shifted, h)
    return _kernels.hfold_mask_size(shifted, h)


def profile(a: Sequence[int], h: int) -> tuple:
    """(|1A|, ..., |hA|), computed incrementally (S_{i+1} = S_i + A)."""
    elems = as_intset(a)
    if h < 1:
        raise ValueError("fold must be >= 1")
    lo = elems[0]
    shifted = elems if lo == 0 else tuple(x - lo for x in elems)
    if len(shifted) == 1:
        return (1,) * h
    if not _use_sparse(shifted, h):
        return tuple(int(s) for s in _kernels.hfold_mask_profile(shifted, h))
    sizes = [len(shifted)]
    cur = set(shifted)
    for _ in range(h - 1):
        cur = {s + e for s in cur for e in shifted}
        sizes.append(len(cur))
    return tuple(sizes)


def restricted_sumset(a: Sequence[int], h: int) -> tuple:
    """h-fold restricted sumset: sums of h pairwise-distinct elements."""
    elems = as_intset(a)
    if h < 1:
        raise ValueError("fold must be >= 1")
    if h > len(elems):
        raise ValueError("fold exceeds cardinality")
    # dp[j] = set of sums of j distinct elements chosen so far
    dp = [set() for _ in range(h + 1)]
    dp[0].add(0)
    for e in elems:
        for j in range(min(h, len(dp)) - 1, -1, -1):
            if dp[j]:
                dp[j + 1].update(s + e for s in dp[j])
    return tuple(sorted(dp[h]))


@dataclass(frozen=True)
class Diameter:
    d: int
    r: int  # excess over the AP of the same size: d - (k-1)


def diameter(a: Sequence[int]) -> Diameter:
    """Diameter of a normalized set (1 less than the shortest covering AP)."""
    elems = normalize(a)
    if len(elems) < 2:
        return Diameter(0, 0)
    d = elems[-1]
    return Diameter(d, d - (len(elems) - 1))


# ---------------------------------------------------------------------------
# lattice sets
# ---------------------------------------------------------------------------

def as_lattice(points) -> frozenset:
    """Lattice set from tuples (plain ints are wrapped as 1-tuples)."""
    pts = set()
    dim = None
    for p in points:
        if isinstance(p, int):
            p = (p,)
        else:
            p = tuple(int(x) for x in p)
        if dim is None:
            dim = len(p)
        elif len(p) != dim:
            raise ValueError("mixed point arities in lattice set")
        pts.add(p)
    if not pts:
        raise ValueError("empty set")
    return frozenset(pts)


def lattice_sumset(points, h: int) -> frozenset:
    """Exact h-fold sumset in Z^r, componentwise addition."""
    pts = as_lattice(points)
    dim = len(next(iter(pts)))
    if h == 0:
        return frozenset({(0,) * dim})
    cur = pts
    for _ in range(h - 1):
        cur = frozenset(tuple(x + y for x, y in zip(p, q)) for p in cur for q in pts)
    return cur


def lattice_profile(points, h: int) -> tuple:
    pts = as_lattice(points)
    sizes = [len(pts)]
    cur = pts
    for _ in range(h - 1):
        cur = frozenset(tuple(x + y for x, y in zip(p, q)) for p in cur for q in pts)
        sizes.append(len(cur))
    return tuple(sizes)


def disjoint_union(a_points, b_points) -> frozenset:
    """(A,0,1,0) | (0,B,0,1) in Z^{r+s+2}.

    The two marker coordinates record how many summands came from each side,
    which is what makes |eta(A|B)| the convolution of the |iA| and |iB|.
    """
    a = as_lattice(a_points)
    b = as_lattice(b_points)
    r = len(next(iter(a)))
    s = len(next(iter(b)))
    out = set()
    for p in a:
        out.add(p + (0,) * s + (1, 0))
    for q in b:
        out.add((0,) * r + q + (0, 1))
    return frozenset(out)


def flatten(points, eta: int, check: bool = True) -> tuple:
    """Freiman-isomorphic image of a lattice set in Z (order eta).

    Each coordinate is translated to be non-negative and mixed with a
    per-coordinate radix eta*span + 1, so eta-fold coordinate sums never
    carry.  The isomorphism (|i.image| = |i.points| for i <= eta) is
    assert-checked unless check=False.
    """
    if eta < 1:
        raise ValueError("eta must be >= 1")
    pts = as_lattice(points)
    dim = len(next(iter(pts)))
    lows = [min(p[j] for p in pts) for j in range(dim)]
    spans = [max(p[j] for p in pts) - lows[j] for j in range(dim)]
    weight = 1
    weights = []
    for j in range(dim):
        weights.append(weight)
        weight *= eta * spans[j] + 1
        if weight > 1 << 62:
            raise OverflowError("flatten overflow")
    image = normalize(
        sum((p[j] - lows[j]) * weights[j] for j in range(dim)) for p in pts
    )
    if len(image) != len(pts):
        raise OverflowError("flatten overflow")  # radix collision cannot happen; guard anyway
    if check:
        flat_prof = profile(image, eta)
        lat_prof = lattice_profile(pts, eta)
        if flat_prof != lat_prof:
            raise AssertionError(
                f"flatten is not order-{eta} isomorphic: {flat_prof} != {lat_prof}"
            )
    return image
