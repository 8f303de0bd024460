import pytest
from hypothesis import given, strategies as st

from catdet import DomainError, binomial, catalan_closed

from oracles import comb, dyck_words


@pytest.mark.parametrize("n, k, expected", [
    (8, 2, 28),
    (5, 0, 1),
    (3, 5, 0),
    (12, 7, 792),
    (0, 0, 1),
    (4, -1, 0),
])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_negative_upper_index_rejected():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_non_integer_rejected():
    with pytest.raises(TypeError):
        binomial(4.0, 2)


@given(st.integers(0, 64), st.integers(0, 64))
def test_symmetry(n, k):
    k = k % (n + 1)
    assert binomial(n, k) == binomial(n, n - k)


@given(st.integers(1, 64), st.integers(1, 64))
def test_pascal_rule(n, k):
    k = (k - 1) % n + 1
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_matches_stdlib_comb():
    for n in range(80):
        for k in range(-2, n + 3):
            assert binomial(n, k) == comb(n, k)


def test_large_values_exact():
    assert binomial(1000, 500) == comb(1000, 500)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
def test_catalan_closed_counts_dyck_words(n):
    assert catalan_closed(n) == len(dyck_words(n))


def test_catalan_closed_exact_division():
    for n in range(501):
        assert catalan_closed(n) * (n + 1) == binomial(2 * n, n)


def test_catalan_closed_round_trips_decimal():
    c = catalan_closed(400)
    assert int(str(c)) == c
