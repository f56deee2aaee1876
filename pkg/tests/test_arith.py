from fractions import Fraction
from itertools import permutations
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from minkcayley.arith import (Matrix, binom, det, format_rational, gbinom, int_det, parse_rational,
                              rank)


def leibniz(rows):
    # independent oracle: permutation expansion
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        total += (-1) ** inversions * prod(rows[i][p[i]] for i in range(n))
    return total


small = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_examples():
    assert det(Matrix.identity(3)) == 1
    assert det(Matrix.from_rows([[1, 1, 1], [1, 2, 3], [1, 4, 9]])) == 2
    assert det(Matrix.from_rows([[1, 2], [1, 2]])) == 0


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_rank_examples():
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.from_rows([[0, 0], [0, 0]])) == 0
    assert rank(Matrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1


@given(st.integers(1, 4).flatmap(square))
def test_det_matches_leibniz(rows):
    assert det(Matrix.from_rows(rows)) == leibniz(rows)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_is_multiplicative(pair):
    a, b = (Matrix.from_rows(m) for m in pair)
    assert det(a @ b) == det(a) * det(b)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=5))
def test_rank_bounded_and_consistent_with_det(rows):
    r = rank(Matrix.from_rows(rows))
    assert 0 <= r <= min(len(rows), 3)
    if len(rows) == 3:
        assert (r == 3) == (int_det(rows) != 0)


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(-2, 0) == 0
    assert binom(4, -1) == 0


@given(st.integers(0, 40), st.integers(0, 40))
def test_binom_agrees_with_math_comb(n, k):
    assert binom(n, k) == comb(n, k)


@given(st.integers(1, 30), st.integers(0, 12))
def test_gbinom_upper_negation(n, k):
    assert gbinom(-n, k) == (-1) ** k * comb(n + k - 1, k)


@given(st.integers(-30, 30), st.integers(1, 12))
def test_gbinom_pascal(n, k):
    assert gbinom(n, k) == gbinom(n - 1, k) + gbinom(n - 1, k - 1)


@pytest.mark.parametrize("text,value", [("3", 3), ("-7/4", Fraction(-7, 4)), ("6/8", Fraction(3, 4))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "2/-3", "abc"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(small)
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x
