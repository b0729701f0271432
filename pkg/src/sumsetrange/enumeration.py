"""Exhaustive enumeration of normalized k-sets by diameter, certified gap
windows, witness search over the full cardinality range, the profile-tuple
atlas with its sumset graph, and the conjecture scanners.

Completeness note: a set of diameter >= 2k-3 has |hA| >= 2hk-3h-k+3, so
enumerating diameters <= 2k-4 decides membership exactly for every size
below that threshold.  Above it there is no finite decision procedure;
witness search is construction-first with an enumeration sweep and a
deterministic local search as fallbacks.
"""

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

from . import _kernels, constructions, core

_SWEEP_CANDIDATE_CAP = 5_000_000
_POOL_BUDGET = 4000
_LOCAL_SEARCH_EVALS = 4000


# ---------------------------------------------------------------------------
# enumeration primitives
# ---------------------------------------------------------------------------

def enumerate_normalized(k: int, d: int, dedup: bool = True) -> Iterator[tuple]:
    """All normalized k-sets {0, a_1, ..., a_{k-2}, d} of diameter exactly d.

    Interiors are lexicographic combinations of [1, d-1]; the gcd filter is
    applied to the full set.  With dedup, only the lexicographically smaller
    of A and its reflection d - A is yielded.
    """
    if k < 2 or d < k - 1 or d < 1:
        raise ValueError("need d >= k-1 >= 1")
    for interior in combinations(range(1, d), k - 2):
        if dedup and interior > tuple(d - a for a in reversed(interior)):
            continue
        g = d
        for a in interior:
            g = math.gcd(g, a)
            if g == 1:
                break
        if g != 1:
            continue
        yield (0,) + interior + (d,)


def achieved_sizes(h: int, k: int, d_lo: int, d_hi: int,
                   want_witness: bool = True, jobs: int = 1):
    """{ |hA| : diam(A) in [d_lo, d_hi] } plus a size -> witness map."""
    d_lo = max(d_lo, k - 1)
    n = h * d_hi + 2
    ds = list(range(d_lo, d_hi + 1))
    if not ds:
        return set(), {}

    def run(shard):
        ach = np.zeros(n, dtype=np.uint8)
        wit = np.full((n, k), -1, dtype=np.int64)
        for d in shard:
            _kernels.scan_diameter(k, d, h, ach, wit, want_witness, True)
        return ach, wit

    if jobs > 1 and len(ds) > 1:
        shards = [ds[i::jobs] for i in range(jobs) if ds[i::jobs]]
        with ThreadPoolExecutor(max_workers=len(shards)) as pool:
            parts = list(pool.map(run, shards))
        ach = np.zeros(n, dtype=np.uint8)
        wit = np.full((n, k), -1, dtype=np.int64)
        for pa, pw in parts:
            fresh = (pa == 1) & (ach == 0)
            if want_witness:
                wit[fresh] = pw[fresh]
            ach |= pa
    else:
        ach, wit = run(ds)
    sizes = {int(s) for s in np.nonzero(ach)[0]}
    witnesses = {}
    if want_witness:
        witnesses = {s: tuple(int(x) for x in wit[s]) for s in sizes}
    return sizes, witnesses


# ---------------------------------------------------------------------------
# range reports
# ---------------------------------------------------------------------------

@dataclass
class RangeReport:
    h: int
    k: int
    d_max: int
    threshold: int
    achieved: tuple
    certified_gaps: tuple
    unresolved: tuple
    witnesses: dict  # size -> normalized set
    confirmed: bool

    def to_json(self) -> str:
        return json.dumps({
            "h": self.h,
            "k": self.k,
            "d_max": self.d_max,
            "threshold": self.threshold,
            "achieved": list(self.achieved),
            "certified_gaps": list(self.certified_gaps),
            "unresolved": list(self.unresolved),
            "witnesses": {str(s): list(a) for s, a in sorted(self.witnesses.items())},
            "confirmed": self.confirmed,
        })


def _default_budget(h: int, k: int) -> int:
    hi = math.comb(h + k - 1, h)
    return max(2 * k, min(4 * hi // h, 10_000))


def certify_gaps(h: int, k: int, jobs: int = 1) -> RangeReport:
    """Gap window only: sizes below 2hk-3h-k+3 not achieved by any k-set.

    This is mathematically complete (diameters <= 2k-4 suffice below the
    threshold); values at or above the threshold are left unresolved.
    """
    if h < 2 or k < 3:
        raise ValueError("need h >= 2 and k >= 3")
    lo, hi = constructions.bounding_interval(h, k)
    threshold = constructions.gap_threshold(h, k)
    d_max = 2 * k - 4
    ach, wit = achieved_sizes(h, k, k - 1, d_max, jobs=jobs)
    gaps = tuple(v for v in range(lo, min(threshold, hi + 1)) if v not in ach)
    return RangeReport(
        h=h, k=k, d_max=d_max, threshold=threshold,
        achieved=tuple(sorted(ach)), certified_gaps=gaps,
        unresolved=tuple(v for v in range(threshold, hi + 1) if v not in ach),
        witnesses=wit, confirmed=False,
    )


# ---------------------------------------------------------------------------
# witness search
# ---------------------------------------------------------------------------

def _direct_candidates(h: int, k: int):
    """Explicit families likely to hit targets: APs, AP-plus-point, the
    sparse/dense blocks, and the shifted filling family."""
    yield tuple(range(k))
    if k >= 2:
        for x in range(k - 1, h * (k - 2) + k + 2):
            yield tuple(range(k - 1)) + (x,)
        for m in range(2, h + 2):
            yield constructions.sparse_S(m, k)
            yield core.normalize(constructions.sparse_T(m, k))
    if k >= 3:
        for j in range(1, (h - 1) * (k - 2) + 2):
            yield constructions.dense_B(h, j, k)
    for i in range(1, h + 1):
        misses = 0
        for d in range(max(k - 2, (h - 1) * i), 20 * k):
            try:
                yield constructions.shifted_filling_family(h, k, d, i)
                misses = 0
            except (core.FillingInfeasibleError, ValueError):
                misses += 1
                if misses >= 5:
                    break


def _profile_pool(h: int, size: int, budget: int = _POOL_BUDGET) -> list:
    """Deduplicated (1, |1A|, ..., |hA|) profiles with one witness each."""
    pool = {}

    def add(a):
        a = core.normalize(a)
        if len(a) == size:
            pool.setdefault((1,) + core.profile(a, h), a)

    if size == 1:
        add((0,))
        return list(pool.items())
    count, d = 0, size - 1
    while count < budget and d <= 50 * size:
        for a in enumerate_normalized(size, d):
            add(a)
            count += 1
            if count >= budget:
                break
        d += 1
    for m in range(2, h + 2):
        add(constructions.sparse_S(m, size))
        add(constructions.sparse_T(m, size))
        if size >= 3:
            for j in range(1, (h - 1) * (size - 2) + 2):
                add(constructions.dense_B(h, j, size))
    return list(pool.items())


def _combo_search(h: int, k: int, targets: set, record, pools: dict):
    """Witnesses as flattened disjoint unions B | C with |B| + |C| = k.

    |h(B|C)| = sum_i |iB| |(h-i)C|, so candidate sizes are one integer
    matmul over the two profile pools; only hits are materialized (and
    re-verified by flatten's isomorphism assertion).
    """
    for k1 in range(1, k // 2 + 1):
        if not targets:
            return
        k2 = k - k1
        for s in (k1, k2):
            if s not in pools:
                pools[s] = _profile_pool(h, s)
        p1, p2 = pools[k1], pools[k2]
        if not p1 or not p2:
            continue
        m1 = np.array([prof for prof, _ in p1], dtype=np.int64)
        m2 = np.array([prof for prof, _ in p2], dtype=np.int64)[:, ::-1]
        vals = m1 @ m2.T
        for t in sorted(targets):
            hit = np.argwhere(vals == t)
            if hit.size:
                i, j = int(hit[0][0]), int(hit[0][1])
                lat = core.disjoint_union(p1[i][1], p2[j][1])
                record(core.flatten(lat, h), t)


def _sweep(h: int, k: int, targets: set, record, d_from: int, d_budget: int):
    """Ascending-diameter exhaustive sweep with early exit, candidate-capped."""
    if not targets or d_budget < d_from:
        return
    n = h * d_budget + 2
    ach = np.zeros(n, dtype=np.uint8)
    wit = np.full((n, k), -1, dtype=np.int64)
    spent = 0
    for d in range(d_from, d_budget + 1):
        if not targets:
            return
        cnt = math.comb(d - 1, k - 2) // 2 + 1
        if spent + cnt > _SWEEP_CANDIDATE_CAP:
            return
        _kernels.scan_diameter(k, d, h, ach, wit, True, True)
        spent += cnt
        for t in [t for t in targets if t < n and ach[t]]:
            record(tuple(int(x) for x in wit[t]), t)


def _local_search(h: int, k: int, target: int, seeds: list,
                  max_evals: int = _LOCAL_SEARCH_EVALS) -> Optional[tuple]:
    """Deterministic hill climb on ||hA| - target| over k-sets containing 0."""
    rng = random.Random((h, k, target).__hash__() & 0x7FFFFFFF)
    d_cap = max(4 * k, 2 * max((max(s) for s in seeds), default=0), 2 * target // h + 2)
    evals = 0
    for seed in seeds:
        cur = set(seed)
        cur.add(0)
        gap = abs(core.sumset_size(tuple(sorted(cur)), h) - target)
        if gap == 0:
            return tuple(sorted(cur))
        while evals < max_evals:
            out = rng.choice([x for x in cur if x != 0])
            nxt = set(cur)
            nxt.remove(out)
            if rng.random() < 0.5:
                # small perturbation: near-extremal sets respond to +-1 tweaks
                cand = out + rng.choice((-3, -2, -1, 1, 2, 3))
            else:
                cand = rng.randrange(1, d_cap)
            if cand in nxt or cand < 1:
                continue
            nxt.add(cand)
            evals += 1
            g = abs(core.sumset_size(tuple(sorted(nxt)), h) - target)
            if g == 0:
                return tuple(sorted(nxt))
            if g <= gap:
                cur, gap = nxt, g
    return None


def _random_search(h: int, k: int, targets: set, record,
                   max_evals: int = 600_000):
    """Deterministic seeded random sampling over a geometric diameter ladder.

    Covers the mid-to-high range (including near-B_h sets) far better than
    local moves; each evaluation is one kernel call.
    """
    rng = random.Random(1_000_003 * h + k)
    ladder = []
    d = 4 * k
    while d <= min((h + 1) ** (k - 1), 1_000_000):
        ladder.append(d)
        d *= 2
    if not ladder:
        ladder = [4 * k]
    evals = 0
    while targets and evals < max_evals:
        a = (0,) + tuple(sorted(rng.sample(range(1, rng.choice(ladder)), k - 1)))
        evals += 1
        s = core.sumset_size(a, h)
        if s in targets:
            record(core.normalize(a), s)


def _resolve_targets(h: int, k: int, targets: set, record,
                     witnesses: dict, d_budget: int):
    """Layered witness search; mutates targets via record on each hit."""
    for a in _direct_candidates(h, k):
        if not targets:
            return
        s = core.sumset_size(a, h)
        if s in targets:
            record(a, s)
    if h == 3 and k >= 3 and targets:
        for (_, y), a in constructions.h3_vertex_witnesses(k).items():
            if y in targets:
                record(a, y)
    if targets:
        _combo_search(h, k, targets, record, pools={})
    if targets:
        _random_search(h, k, targets, record)
    if targets:
        _sweep(h, k, targets, record, 2 * k - 3, d_budget)
    for t in sorted(targets, reverse=True):
        if t not in targets:
            continue
        near = sorted(witnesses, key=lambda s: abs(s - t))[:3]
        seeds = [witnesses[s] for s in near]
        seeds.append(constructions.sparse_S(h + 1, k))
        seeds.append(tuple(range(k)))
        found = _local_search(h, k, t, seeds)
        if found is not None:
            record(found, t)


def verify_range(h: int, k: int, d_budget: Optional[int] = None,
                 jobs: int = 1) -> RangeReport:
    """Certified gap window plus a witness for every size above the threshold.

    confirmed means: no unresolved sizes and the certified gaps are exactly
    the excluded triangle restricted to the window.  Unresolved sizes are a
    budget statement, not a disproof.
    """
    if h < 1 or k < 2:
        raise ValueError("need h >= 1 and k >= 2")
    lo, hi = constructions.bounding_interval(h, k)
    if d_budget is None:
        d_budget = _default_budget(h, k)
    if h == 1:
        return RangeReport(h=h, k=k, d_max=d_budget, threshold=lo,
                           achieved=(k,), certified_gaps=(), unresolved=(),
                           witnesses={k: tuple(range(k))}, confirmed=True)
    threshold = constructions.gap_threshold(h, k)
    witnesses: dict = {}
    achieved: set = set()
    if 2 * k - 4 >= k - 1:
        ach, wit = achieved_sizes(h, k, k - 1, 2 * k - 4, jobs=jobs)
        achieved |= ach
        witnesses.update(wit)
    certified_gaps = tuple(v for v in range(lo, min(threshold, hi + 1))
                           if v not in achieved)
    targets = set(range(max(threshold, lo), hi + 1)) - achieved

    def record(a, t):
        if t not in targets:
            return
        a = core.normalize(a)
        got = core.sumset_size(a, h)
        if len(a) != k or got != t:
            raise AssertionError(f"witness re-verification failed: |{h}A|={got}, want {t}")
        witnesses[t] = a
        achieved.add(t)
        targets.discard(t)

    _resolve_targets(h, k, targets, record, witnesses, d_budget)
    unresolved = tuple(sorted(targets))
    delta = set(constructions.delta_set(h, k).excluded)
    window_delta = {v for v in delta if lo <= v < threshold}
    confirmed = not unresolved and set(certified_gaps) == window_delta
    return RangeReport(h=h, k=k, d_max=d_budget, threshold=threshold,
                       achieved=tuple(sorted(achieved)),
                       certified_gaps=certified_gaps, unresolved=unresolved,
                       witnesses=witnesses, confirmed=confirmed)


def find_witness(h: int, k: int, target: int,
                 d_budget: Optional[int] = None) -> Optional[tuple]:
    """A normalized k-set with |hA| = target, or None.

    None below the threshold is a certificate of non-membership; None above
    it only means the budget was exhausted.
    """
    lo, hi = constructions.bounding_interval(h, k)
    if not lo <= target <= hi:
        raise ValueError("target outside bounding interval")
    if d_budget is None:
        d_budget = _default_budget(h, k)
    threshold = constructions.gap_threshold(h, k)
    if target < threshold:
        ach, wit = achieved_sizes(h, k, k - 1, max(k - 1, 2 * k - 4))
        return wit.get(target)
    ach, wit = achieved_sizes(h, k, k - 1, max(k - 1, 2 * k - 4))
    if target in wit:
        return wit[target]
    targets = {target}
    out = {}

    def record(a, t):
        if t in targets:
            a = core.normalize(a)
            if len(a) == k and core.sumset_size(a, h) == t:
                out[t] = a
                targets.discard(t)

    _resolve_targets(h, k, targets, record, wit, d_budget)
    return out.get(target)


# ---------------------------------------------------------------------------
# tuple atlas and the sumset graph
# ---------------------------------------------------------------------------

@dataclass
class TupleAtlas:
    k: int
    hmax: int
    d_max: int
    tuples: dict  # (|2A|, ..., |hmaxA|) -> witness
    stabilized: bool

    def to_csv(self) -> str:
        header = ["k"] + [f"size_{i}A" for i in range(2, self.hmax + 1)] + ["witness"]
        lines = [",".join(header)]
        for prof in sorted(self.tuples):
            wit = ";".join(str(x) for x in self.tuples[prof])
            lines.append(",".join([str(self.k)] + [str(x) for x in prof] + [wit]))
        return "\n".join(lines) + "\n"


def _atlas_cap_rescan(k, d, hmax, tuples):
    for a in enumerate_normalized(k, d):
        prof = core.profile(a, hmax)[1:]
        tuples.setdefault(prof, a)


def tuple_atlas(k: int, hmax: int, d_start: Optional[int] = None,
                stall_window: Optional[int] = None,
                d_cap: int = 10_000) -> TupleAtlas:
    """Profile tuples (|2A|, ..., |hmaxA|) over ascending diameters.

    Stops after stall_window (default 2k) consecutive diameters contribute
    no new tuple — a heuristic stopping rule, recorded in `stabilized`, not
    a completeness proof.
    """
    if k < 2 or hmax < 2:
        raise ValueError("need k >= 2 and hmax >= 2")
    window = stall_window if stall_window is not None else 2 * k
    maxes = [math.comb(i + k - 1, i) + 1 for i in range(2, hmax + 1)]
    strides = np.empty(hmax - 1, dtype=np.int64)
    total = 1
    for i, mx in enumerate(maxes):
        strides[i] = total
        total *= mx
    if total > 200_000_000:
        raise ValueError("atlas index space too large; reduce hmax or k")
    seen = np.zeros(total, dtype=np.uint8)
    cap = 1 << 16
    out_t = np.empty((cap, hmax - 1), dtype=np.int64)
    out_w = np.empty((cap, k), dtype=np.int64)
    tuples: dict = {}
    d = max(d_start if d_start is not None else k - 1, k - 1)
    stall = 0
    last = d
    while stall < window and d <= d_cap:
        n_new = _kernels.atlas_diameter(k, d, hmax, seen, strides, out_t, out_w)
        if n_new > cap:
            _atlas_cap_rescan(k, d, hmax, tuples)
        else:
            for row in range(n_new):
                prof = tuple(int(x) for x in out_t[row])
                tuples.setdefault(prof, tuple(int(x) for x in out_w[row]))
        stall = stall + 1 if n_new == 0 else 0
        last = d
        d += 1
    return TupleAtlas(k=k, hmax=hmax, d_max=last, tuples=tuples,
                      stabilized=stall >= window)


def graph_connectivity(atlas: TupleAtlas, src: tuple, dst: tuple):
    """BFS path between g-vertices under king-move adjacency, or None.

    Vertices are the (|2A|, |3A|) projections of the atlas; a disconnected
    verdict is relative to this (possibly incomplete) vertex set.
    """
    verts = {(p[0], p[1]) for p in atlas.tuples}
    src, dst = tuple(src), tuple(dst)
    if src not in verts or dst not in verts:
        raise ValueError("endpoint not in atlas")
    prev = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for v in frontier:
            if v == dst:
                path = []
                while v is not None:
                    path.append(v)
                    v = prev[v]
                return path[::-1]
            for dx in (-1, 0, 1):
                for dy in (-1, 0, 1):
                    w = (v[0] + dx, v[1] + dy)
                    if w in verts and w not in prev:
                        prev[w] = v
                        nxt.append(w)
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# lemma / conjecture scanners
# ---------------------------------------------------------------------------

def check_interval_image(values) -> bool:
    """True iff the set of values is exactly [min, max]."""
    vals = set(values)
    if not vals:
        raise ValueError("empty value list")
    return vals == set(range(min(vals), max(vals) + 1))


def verify_diameter_lemmas(h: int, k: int, d_max: int) -> Optional[tuple]:
    """First counterexample (A, |hA|) to the two diameter lemmas, or None.

    diam <= 2k-3: m + r(h-1) <= |hA| <= m + rh;  diam >= 2k-3:
    |hA| >= 2hk-3h-k+3.  Both lemmas are proven, so any hit is a bug.
    """
    if h < 2 or k < 2:
        raise ValueError("need h >= 2 and k >= 2")
    m = h * k - h + 1
    threshold = constructions.gap_threshold(h, k)
    for d in range(k - 1, d_max + 1):
        r = d - (k - 1)
        for a in enumerate_normalized(k, d):
            s = core.sumset_size(a, h)
            if d <= 2 * k - 3 and not m + r * (h - 1) <= s <= m + r * h:
                return (a, s)
            if d >= 2 * k - 3 and s < threshold:
                return (a, s)
    return None


@dataclass
class ConjectureScan:
    h: int
    k: int
    d_max: int
    rows: tuple          # (d, baseline, minimum achieved, witness)
    counterexamples: tuple


def conjecture51_scan(h: int, k: int, d_max: int) -> ConjectureScan:
    """Compare min |hA| per diameter against |h([0,k-2] u {d})|."""
    if k < 3:
        raise ValueError("need k >= 3")
    rows = []
    bad = []
    for d in range(k - 1, d_max + 1):
        baseline = core.sumset_size(tuple(range(k - 1)) + (d,), h)
        n = h * d + 2
        ach = np.zeros(n, dtype=np.uint8)
        wit = np.full((n, k), -1, dtype=np.int64)
        _kernels.scan_diameter(k, d, h, ach, wit, True, True)
        hits = np.nonzero(ach)[0]
        mn = int(hits[0])
        witness = tuple(int(x) for x in wit[mn])
        rows.append((d, baseline, mn, witness))
        if mn < baseline:
            bad.append((d, baseline, mn, witness))
    return ConjectureScan(h=h, k=k, d_max=d_max,
                          rows=tuple(rows), counterexamples=tuple(bad))


def restricted_range(h: int, k: int, d_max: int) -> set:
    """Achieved restricted-sumset sizes over the enumeration window.

    No completeness certificate: the diameter lemmas are not proven for
    restricted sumsets.
    """
    if h > k:
        raise ValueError("fold exceeds cardinality")
    out = set()
    for d in range(k - 1, d_max + 1):
        for a in enumerate_normalized(k, d):
            out.add(len(core.restricted_sumset(a, h)))
    return out
