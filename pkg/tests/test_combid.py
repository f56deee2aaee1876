from math import factorial

import pytest
from hypothesis import given, strategies as st

from minkcayley import combid
from minkcayley.combid import IntPolynomial


def test_stirling_examples():
    assert combid.stirling2(4, 2) == 7
    assert all(combid.stirling2(m, 1) == 1 for m in range(1, 10))
    assert all(combid.stirling2(m, m) == 1 for m in range(10))


def test_eulerian_examples():
    assert combid.eulerian(1, 0) == 1
    assert combid.eulerian(3, 1) == 4
    assert all(combid.eulerian(m, m) == 0 for m in range(1, 10))


@pytest.mark.parametrize("m", range(1, 10))
def test_eulerian_row_sums_to_factorial(m):
    assert sum(combid.eulerian(m, i) for i in range(m)) == factorial(m)


@pytest.mark.parametrize("m,i", [(m, i) for m in range(2, 9) for i in range(m)])
def test_eulerian_recurrence(m, i):
    lhs = combid.eulerian(m, i)
    rhs = (m - i) * combid.eulerian(m - 1, i - 1) + (i + 1) * combid.eulerian(m - 1, i)
    assert lhs == rhs


def test_chain_count_examples():
    assert combid.chain_count_B(3, 2) == 6
    assert combid.chain_count_A(2, 1) == 3
    assert all(combid.chain_count_A(m, 0) == 1 for m in range(6))
    assert all(combid.chain_count_B(m, m) == factorial(m) for m in range(7))


@pytest.mark.parametrize("m", range(0, 9))
def test_chain_counts_match_enumeration(m):
    for k in range(m + 2):
        assert combid.chain_count_A(m, k) == combid.chain_count_A_enum(m, k)
        assert combid.chain_count_B(m, k) == combid.chain_count_B_enum(m, k)


@pytest.mark.parametrize("m", range(1, 9))
def test_chain_count_A_splits_on_empty_first_set(m):
    # S_1 empty leaves a B-chain with k blocks, otherwise there are k+1 blocks
    for k in range(0, m + 1):
        assert combid.chain_count_A(m, k) == combid.chain_count_B(m, k) + combid.chain_count_B(m, k + 1)


def test_d_sum_examples():
    assert combid.chain_count_D_sum(2, 0, 1) == 3
    assert combid.chain_count_D_sum(3, 2, 1) == 1
    assert combid.chain_count_D_sum(3, 1, 3) == 0


@pytest.mark.parametrize("r_size", range(1, 7))
def test_d_sum_matches_enumeration(r_size):
    for x in range(r_size):
        for ell in range(0, 7):
            assert combid.chain_count_D_sum(r_size, x, ell) == combid.chain_count_D_sum_enum(r_size, x, ell)


@pytest.mark.parametrize("m", range(1, 13))
def test_worpitzky_forms(m):
    assert combid.verify_WE1(m)
    assert combid.verify_WE2(m)


coeffs = st.lists(st.integers(-9, 9), max_size=5)


@given(coeffs, coeffs, coeffs)
def test_polynomial_ring_laws(a, b, c):
    p, q, s = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    assert (p + q) * s == p * s + q * s
    assert p * q == q * p
    assert (p - p).degree <= 0 and (p - p).coeff(0) == 0


@given(coeffs, st.integers(-5, 5))
def test_polynomial_evaluation(a, x):
    p = IntPolynomial(a)
    assert p(x) == sum(c * x ** i for i, c in enumerate(a))
