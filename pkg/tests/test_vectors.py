import json

import pytest
from hypothesis import given, strategies as st

from minkcayley.vectors import (FVector, HVector, f_F_from_K, f_K_from_F, f_to_h, g_entry, g_table,
                                h_relations_KF, h_to_f, nonempty_subsets, vector_from_json,
                                vector_to_json)


def test_simplex_boundary():
    assert f_to_h(FVector(3, (1, 4, 6, 4))) == HVector(3, (1, 1, 1, 1))
    assert h_to_f(HVector(3, (1, 1, 1, 1))) == FVector(3, (1, 4, 6, 4))


def test_cyclic_4_6():
    assert f_to_h(FVector(4, (1, 6, 15, 18, 9))) == HVector(4, (1, 2, 3, 2, 1))
    assert h_to_f(HVector(4, (1, 2, 3, 2, 1))) == FVector(4, (1, 6, 15, 18, 9))


def test_empty_complex_gives_alternating_binomials():
    assert f_to_h(FVector(4, (1, 0, 0, 0, 0))) == HVector(4, (1, -4, 6, -4, 1))


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        HVector(5, (1, 2, 3, 2, 1))


def test_out_of_range_entries_are_zero():
    f = FVector(2, (1, 3, 3))
    assert f.f(-2) == 0 and f.f(2) == 0 and f.f(-1) == 1


def test_g_examples():
    h = HVector(2, (1, 2, 3))
    assert [g_entry(h, 0, k) for k in range(3)] == [1, 2, 3]
    assert [g_entry(h, 1, k) for k in range(3)] == [1, 1, 1]
    assert [g_entry(h, 2, k) for k in range(3)] == [1, 0, 0]


vec = st.integers(0, 6).flatmap(
    lambda d: st.lists(st.integers(-50, 50), min_size=d + 1, max_size=d + 1).map(lambda e: (d, e)))


@given(vec)
def test_f_h_round_trip(v):
    d, e = v
    f = FVector(d, e)
    assert h_to_f(f_to_h(f)) == f


@given(vec, st.integers(0, 4))
def test_g_table_matches_direct_sum(v, m):
    h = HVector(*v)
    table = g_table(h, m)
    for order in range(m + 1):
        for k in range(h.delta + 1):
            assert table.g(order, k) == g_entry(h, order, k)


def _parts(draw_entries, R, delta, cls):
    return {S: cls(delta, draw_entries[i]) for i, S in enumerate(nonempty_subsets(R))}


@given(st.integers(1, 3).flatmap(lambda r: st.tuples(
    st.just(r), st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4),
                         min_size=2 ** r - 1, max_size=2 ** r - 1))))
def test_K_F_relations_invert_each_other(data):
    r, entries = data
    R = frozenset(range(1, r + 1))
    subsets = nonempty_subsets(R)
    fF = {S: FVector(3, entries[i]) for i, S in enumerate(subsets)}
    fK = {S: f_K_from_F(fF, S) for S in subsets}
    assert all(f_F_from_K(fK, S) == fF[S] for S in subsets)
    hF = {S: HVector(3, entries[i]) for i, S in enumerate(subsets)}
    hK = {S: h_relations_KF(hF, S, "K_from_F") for S in subsets}
    assert all(h_relations_KF(hK, S, "F_from_K") == hF[S] for S in subsets)


def test_single_summand_relations_are_identity():
    f = {frozenset({1}): FVector(2, (1, 5, 5))}
    assert f_K_from_F(f, {1}) == f[frozenset({1})]
    h = {frozenset({1}): HVector(2, (1, 3, 1))}
    assert h_relations_KF(h, {1}, "F_from_K") == h[frozenset({1})]


def test_missing_subset_raises():
    with pytest.raises(KeyError):
        f_K_from_F({frozenset({1, 2}): FVector(2, (1, 0, 0))}, {1, 2})


def test_unknown_direction_raises():
    with pytest.raises(ValueError):
        h_relations_KF({frozenset({1}): HVector(1, (1, 1))}, {1}, "sideways")


@given(vec)
def test_json_round_trip(v):
    for obj in (FVector(*v), HVector(*v)):
        text = vector_to_json(obj)
        assert vector_from_json(text) == obj
        assert json.loads(text)["offset"] == (-1 if isinstance(obj, FVector) else 0)


def test_subset_order():
    assert nonempty_subsets({2, 1}) == [frozenset({1}), frozenset({2}), frozenset({1, 2})]
    assert nonempty_subsets({1, 2}, proper=True) == [frozenset({1}), frozenset({2})]
