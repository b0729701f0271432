import math

import pytest

from sumsetrange import constructions as C
from sumsetrange import core, enumeration as E


# ---------------------------------------------------------------------------
# enumeration primitives
# ---------------------------------------------------------------------------

def test_enumerate_counts():
    raw = list(E.enumerate_normalized(6, 8, dedup=False))
    assert len(raw) <= math.comb(7, 4)
    assert all(a[0] == 0 and a[-1] == 8 for a in raw)
    assert list(E.enumerate_normalized(2, 1)) == [(0, 1)]


def test_enumerate_k3_d4():
    assert list(E.enumerate_normalized(3, 4, dedup=False)) == [(0, 1, 4), (0, 3, 4)]
    assert list(E.enumerate_normalized(3, 4)) == [(0, 1, 4)]  # (0,3,4) is its reflection


def test_enumerate_reflection_invariance():
    for a in E.enumerate_normalized(5, 9, dedup=False):
        refl = core.normalize(a[-1] - x for x in a)
        assert core.sumset_size(a, 3) == core.sumset_size(refl, 3)


def test_achieved_sizes_examples():
    sizes, wit = E.achieved_sizes(3, 5, 4, 6)
    assert {s for s in sizes if s < 19} == {13, 15, 16, 17, 18}
    sizes, _ = E.achieved_sizes(2, 3, 2, 3)
    assert {5, 6} <= sizes
    sizes, _ = E.achieved_sizes(4, 5, 4, 4)
    assert sizes == {4 * 5 - 4 + 1}
    for s, a in wit.items():
        assert core.sumset_size(a, 3) == s


def test_achieved_sizes_parallel_matches_serial():
    s1, _ = E.achieved_sizes(3, 6, 5, 10, jobs=1)
    s2, w2 = E.achieved_sizes(3, 6, 5, 10, jobs=4)
    assert s1 == s2
    for s, a in w2.items():
        assert core.sumset_size(a, 3) == s


def test_achieved_monotone_window():
    prev = set()
    for d_hi in range(5, 12):
        cur, _ = E.achieved_sizes(3, 6, 5, d_hi, want_witness=False)
        assert prev <= cur
        prev = cur


# ---------------------------------------------------------------------------
# gap certification and range reports
# ---------------------------------------------------------------------------

def test_certify_gaps_examples():
    assert E.certify_gaps(3, 5).certified_gaps == (14,)
    assert E.certify_gaps(4, 7).certified_gaps == (26, 27, 30)
    r = E.certify_gaps(6, 7)
    assert set(C.delta_set(6, 7).excluded) <= set(r.certified_gaps)


def test_verify_range_r34():
    r = E.verify_range(3, 4)
    assert r.confirmed
    assert set(r.achieved) == {10} | set(range(12, 21))
    assert r.certified_gaps == (11,)
    assert set(r.witnesses) == set(r.achieved)
    for s, a in r.witnesses.items():
        assert len(a) == 4 and core.sumset_size(a, 3) == s


def test_verify_range_r2k():
    for k in range(2, 7):
        r = E.verify_range(2, k)
        assert r.confirmed
        assert set(r.achieved) == set(range(2 * k - 1, math.comb(k + 1, 2) + 1))


def test_verify_range_h1():
    r = E.verify_range(1, 5)
    assert r.confirmed and r.achieved == (5,)


def test_delta_disjoint_from_achieved():
    for h, k in [(3, 5), (4, 5), (4, 6), (5, 5)]:
        r = E.verify_range(h, k)
        assert not set(C.delta_set(h, k).excluded) & set(r.achieved)


def test_range_report_json_roundtrip():
    import json
    r = E.verify_range(3, 4)
    data = json.loads(r.to_json())
    assert data["confirmed"] is True
    for s, a in data["witnesses"].items():
        assert core.sumset_size(tuple(a), 3) == int(s)


def test_find_witness():
    assert E.find_witness(3, 4, 10) == (0, 1, 2, 3)
    w = E.find_witness(3, 4, 20)
    assert core.sumset_size(w, 3) == 20
    assert E.find_witness(3, 4, 11) is None  # certified gap
    with pytest.raises(ValueError, match="bounding interval"):
        E.find_witness(3, 4, 21)


# ---------------------------------------------------------------------------
# atlas and graph
# ---------------------------------------------------------------------------

def test_tuple_atlas_k2():
    at = E.tuple_atlas(2, 3)
    assert dict(at.tuples) == {(3, 4): (0, 1)}


def test_tuple_atlas_k6_fig2():
    at = E.tuple_atlas(6, 3)
    verts = {(t[0], t[1]) for t in at.tuples}
    assert (12, 18) in verts and (21, 56) in verts
    assert at.stabilized
    path = E.graph_connectivity(at, (12, 18), (21, 56))
    assert path is not None and path[0] == (12, 18) and path[-1] == (21, 56)


def test_tuple_atlas_witnesses_verify():
    at = E.tuple_atlas(5, 3, d_cap=30)
    for prof, a in at.tuples.items():
        assert core.profile(a, 3)[1:] == prof


def test_graph_connectivity_k3():
    at = E.tuple_atlas(3, 3)
    assert E.graph_connectivity(at, (6, 9), (6, 10)) is not None
    assert E.graph_connectivity(at, (6, 9), (6, 9)) == [(6, 9)]
    with pytest.raises(ValueError, match="endpoint"):
        E.graph_connectivity(at, (6, 9), (99, 99))


def test_atlas_csv():
    at = E.tuple_atlas(3, 3)
    lines = at.to_csv().strip().splitlines()
    assert lines[0] == "k,size_2A,size_3A,witness"
    assert any(line.startswith("3,6,9,") for line in lines)


# ---------------------------------------------------------------------------
# scanners
# ---------------------------------------------------------------------------

def test_check_interval_image():
    assert E.check_interval_image([5, 6, 7])
    assert not E.check_interval_image([5, 7])
    with pytest.raises(ValueError):
        E.check_interval_image([])


def test_diameter_lemmas_pass():
    assert E.verify_diameter_lemmas(2, 4, 12) is None
    assert E.verify_diameter_lemmas(3, 5, 20) is None


def test_ap_is_tight():
    a = tuple(range(6))
    for h in (2, 3, 4):
        assert core.sumset_size(a, h) == h * 6 - h + 1


def test_conjecture51_no_counterexamples():
    assert E.conjecture51_scan(4, 4, 20).counterexamples == ()
    scan = E.conjecture51_scan(3, 4, 30)
    assert scan.counterexamples == ()
    for d, baseline, mn, wit in scan.rows:
        assert mn == core.sumset_size(tuple(range(3)) + (d,), 3)  # trivially tight


def test_restricted_range():
    assert 3 in E.restricted_range(2, 3, 6)
    assert E.restricted_range(4, 4, 8) == {1}
    assert {5, 6} <= E.restricted_range(2, 4, 10)
    with pytest.raises(ValueError):
        E.restricted_range(5, 4, 8)


def test_completeness_small_pairs():
    # below the threshold, d <= 2k-4 enumeration is complete: pushing the
    # window further must not reveal new sizes under the threshold
    for h, k in [(2, 4), (3, 4), (4, 4), (5, 3), (2, 5), (3, 5)]:
        threshold = C.gap_threshold(h, k)
        base, _ = E.achieved_sizes(h, k, k - 1, max(k - 1, 2 * k - 4), want_witness=False)
        deep, _ = E.achieved_sizes(h, k, k - 1, 4 * k, want_witness=False)
        assert {s for s in base if s < threshold} == {s for s in deep if s < threshold}
