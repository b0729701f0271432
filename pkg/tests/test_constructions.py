import random

import pytest

from sumsetrange import constructions as C
from sumsetrange import core, series
from sumsetrange.core import FillingInfeasibleError


# ---------------------------------------------------------------------------
# delta set and bounding interval
# ---------------------------------------------------------------------------

def test_delta_examples():
    assert C.delta_set(6, 7).excluded == (38, 39, 40, 41, 44, 45, 46, 50, 51, 56)
    for k in (4, 6, 9):
        assert C.delta_set(3, k).excluded == (3 * k - 1,)
    assert C.delta_set(2, 9).excluded == ()
    assert C.delta_set(4, 7).excluded == (26, 27, 30)


def test_delta_cardinality_and_window():
    for h in range(3, 8):
        for k in range(h, 10):
            ds = C.delta_set(h, k)
            assert len(ds.excluded) == (h - 1) * (h - 2) // 2
            m = h * k - h + 1
            assert all(m + 1 <= v <= 2 * h * k - 3 * h - k + 2 for v in ds.excluded)


def test_bounding_interval_examples():
    assert C.bounding_interval(6, 7) == (37, 924)
    assert C.bounding_interval(3, 4) == (10, 20)
    assert C.bounding_interval(1, 9) == (9, 9)


# ---------------------------------------------------------------------------
# filling sets
# ---------------------------------------------------------------------------

def test_filling_fig4_shape():
    a = C.build_filling_set(2, 100, 30)
    assert len(a) == 30 and a[-1] <= 100
    assert core.iterated_sumset(a, 2) == tuple(range(201))


def test_filling_trivial_ap():
    assert C.build_filling_set(3, 7, 8) == tuple(range(8))


def test_filling_h3():
    a = C.build_filling_set(3, 60, 40)
    assert core.iterated_sumset(a, 3) == tuple(range(181))


def test_filling_infeasible():
    with pytest.raises(FillingInfeasibleError):
        C.build_filling_set(2, 10_000, 5)
    with pytest.raises(FillingInfeasibleError):
        C.build_filling_set(2, 3, 10)  # k > d + 1


def test_filling_superset_preserved():
    a = set(C.build_filling_set(2, 60, 23))
    a.add(29)
    assert core.iterated_sumset(tuple(sorted(a)), 2) == tuple(range(121))


def test_shifted_filling_examples():
    a = C.shifted_filling_family(2, 5, 3, 2)
    assert a == (0, 2, 3, 4, 5)
    assert core.sumset_size(a, 2) == 10
    assert core.sumset_size(C.shifted_filling_family(2, 5, 3, 1), 2) == 9
    a = C.shifted_filling_family(3, 15, 20, 3)
    assert core.sumset_size(a, 3) == 3 * 23 - 3 + 2


# ---------------------------------------------------------------------------
# dense and sparse blocks
# ---------------------------------------------------------------------------

def test_dense_B_examples():
    b = C.dense_B(4, 1, 3)
    assert b == (0, 1, 5)
    assert core.profile(b, 4) == (3, 6, 10, 15)
    s = (5 - 1) * (4 - 2) + 1
    assert C.dense_B(5, s, 4) == (0, 1, 2, 3)  # boundary j: full AP
    for j in range(2, 10):
        p_prev = core.profile(C.dense_B(5, j - 1, 4), 5)
        p_cur = core.profile(C.dense_B(5, j, 4), 5)
        assert all(0 <= a - b <= 5 for a, b in zip(p_prev, p_cur))


def test_dense_B_range_errors():
    with pytest.raises(ValueError):
        C.dense_B(4, 0, 3)
    with pytest.raises(ValueError):
        C.dense_B(4, 99, 3)


def test_sparse_examples():
    assert C.sparse_S(3, 4) == (0, 1, 3, 9)
    assert C.sparse_T(2, 3) == (1, 2, 4)
    assert C.sparse_S(7, 2) == (0, 1)


# ---------------------------------------------------------------------------
# the A_b family
# ---------------------------------------------------------------------------

def test_family_minimal_is_binomial():
    p = C.FamilyParams.minimal(4, 14, 3)
    assert C.family_series(p).coeffs == series.binomial_series(14, 4).coeffs


def test_family_increment_s_h_decrements_size():
    base = C.FamilyParams.minimal(4, 15, 3)
    bumped = C.FamilyParams(h=4, k=15, b=3, j=1, s=(2, 3), t=(2, 2))
    assert C.family_size(bumped) == C.family_size(base) - 1


def test_family_residual_too_small():
    with pytest.raises(ValueError, match="residual"):
        C.FamilyParams(h=4, k=11, b=3, j=1, s=(2, 2), t=(2, 2))


def test_family_invariant_violations():
    with pytest.raises(ValueError, match="b="):
        C.FamilyParams.minimal(4, 14, 2)
    with pytest.raises(ValueError, match="j="):
        C.FamilyParams.minimal(4, 14, 3, j=99)


def test_family_member_flattens_to_series_size():
    p = C.FamilyParams.minimal(4, 13, 3)
    flat = core.flatten(C.family_Ab_member(p), 4)
    assert len(flat) == 13
    assert core.sumset_size(flat, 4) == C.family_size(p)


# ---------------------------------------------------------------------------
# h = 3 path machinery
# ---------------------------------------------------------------------------

def test_h3_path_endpoints_and_k4():
    sets = C.h3_path_sets(6)
    assert sets[0] == (0, 2, 3, 4, 5, 6)
    assert C.g_of(sets[0]) == (12, 18)
    assert C.g_of(sets[-1]) == (16, 31)
    assert C.B2_PRIME in C.h3_path_sets(4)
    assert C.g_of(C.B2_PRIME) == (9, 16)


def test_h3_path_pairwise_adjacent():
    for k in range(4, 9):
        gs = [C.g_of(a) for a in C.h3_path_sets(k)]
        for u, v in zip(gs, gs[1:]):
            assert abs(u[0] - v[0]) <= 1 and abs(u[1] - v[1]) <= 1


def test_g_formula_matches_computed():
    for k in range(4, 11):
        for a in list(range(k - 1)) + list(range(k - 1, 2 * k - 3)) + [2 * k - 2]:
            try:
                predicted = C.g_formula("A", k, a)
            except ValueError:
                continue
            assert predicted == C.g_of(C._path_A(k, a)), (k, a)
        for b in list(range(k - 3)) + [k - 2]:
            try:
                predicted = C.g_formula("B", k, b)
            except ValueError:
                continue
            assert predicted == C.g_of(C._path_B(k, b)), (k, b)


def test_g_formula_examples():
    assert C.g_formula("A", 6, 0) == (12, 18)
    assert C.g_formula("A", 6, 4) == (15, 25)
    assert C.g_formula("B", 7, 1) == (16, 24)
    with pytest.raises(ValueError):
        C.g_formula("A", 6, 2 * 6 - 3)  # the path's deliberate index gap


def test_phi_extend_examples():
    assert C.phi_extend((0, 1, 3), 2) == (0, 1, 3, 10)
    assert core.profile((0, 1, 3, 10), 3) == (4, 10, 19)
    assert C.phi_extend((0, 1, 3), 1) == (0, 1, 3, 9)
    assert core.sumset_size((0, 1, 3, 9), 3) == 18
    assert C.phi_extend((0, 1), 1) == (0, 1, 3)


def test_phi_identities_random():
    rng = random.Random(3)
    for _ in range(40):
        a = core.normalize(rng.sample(range(40), rng.randint(2, 7)))
        for variant in (1, 2):
            C.phi_extend(a, variant)  # identities assert-checked internally


def test_h3_vertex_witnesses_cover_interval():
    import math
    for k in (4, 5, 6):
        ys = {y for (_, y) in C.h3_vertex_witnesses(k)}
        assert set(range(3 * k, math.comb(k + 2, 3) + 1)) <= ys
        assert 3 * k - 1 not in ys
