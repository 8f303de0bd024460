import pytest
from hypothesis import given, strategies as st

from catdet import (
    DomainError,
    TruncatedSeries,
    ValidationError,
    binomial_power,
    build_toeplitz_hessenberg,
    convolve,
    principal_minors,
    reciprocal,
    reciprocal_via_minors,
    verify_convolution_identity,
    verify_recurrence_identity,
)
from catdet.series import toeplitz_det_sequence

from oracles import comb, leibniz_det


@pytest.mark.parametrize("n, order, expected", [
    (2, 3, [1, 2, 1, 0]),
    (8, 2, [1, 8, 28]),
    (0, 2, [1, 0, 0]),
])
def test_binomial_power(n, order, expected):
    assert list(binomial_power(n, order).coeffs) == expected


@pytest.mark.parametrize("f, order, expected", [
    ([1, 2, 1], 3, [1, -2, 3, -4]),
    ([1], 4, [1, 0, 0, 0, 0]),
    (binomial_power(8, 2), 2, [1, -8, 36]),
])
def test_reciprocal_examples(f, order, expected):
    g = reciprocal(f, order)
    assert list(g.coeffs) == expected
    assert list(convolve(f, g, order).coeffs) == [1] + [0] * order


def test_reciprocal_needs_unit_constant():
    with pytest.raises(DomainError):
        reciprocal([2, 1], 3)
    with pytest.raises(DomainError):
        reciprocal([-1, 1], 3)


@given(st.lists(st.integers(-9, 9), max_size=30))
def test_reciprocal_inverts(tail):
    f = [1] + tail
    order = len(tail)
    g = reciprocal(f, order)
    assert list(convolve(f, g).coeffs) == [1] + [0] * order


def test_reciprocal_beyond_input_order():
    g = reciprocal([1, 1], 6)
    assert list(g.coeffs) == [1, -1, 1, -1, 1, -1, 1]


@pytest.mark.parametrize("n, order, expected", [
    (2, 4, [1, -2, 3, -4, 5]),
    (8, 2, [1, -8, 36]),
    (5, 0, [1]),
])
def test_reciprocal_via_minors(n, order, expected):
    assert list(reciprocal_via_minors(n, order).coeffs) == expected


def test_minors_match_leibniz():
    for n in (1, 2, 3, 5):
        J = build_toeplitz_hessenberg(n, 6)
        rows = J.to_rows()
        brute = [1] + [leibniz_det([r[:k] for r in rows[:k]]) for k in range(1, 7)]
        assert principal_minors(J, 6) == brute == [comb(n + k - 1, k) for k in range(7)]


def test_three_routes_agree():
    for n in range(1, 13):
        closed = [(-1) ** k * comb(n + k - 1, k) for k in range(51)]
        assert list(reciprocal(binomial_power(n, 50), 50).coeffs) == closed
        assert list(reciprocal_via_minors(n, 50).coeffs) == closed


@pytest.mark.parametrize("n, k, expected", [(2, 1, 0), (2, 2, 0), (5, 0, 1)])
def test_convolution_identity_examples(n, k, expected):
    assert verify_convolution_identity(n, k) == expected


def test_convolution_identity_sweep():
    for n in range(1, 21):
        assert verify_convolution_identity(n, 0) == 1
        for k in range(1, 41):
            assert verify_convolution_identity(n, k) == 0


@pytest.mark.parametrize("n, m, value", [(2, 2, 3), (1, 5, 1), (8, 2, 36), (3, 0, 1)])
def test_recurrence_identity_examples(n, m, value):
    r = verify_recurrence_identity(n, m)
    assert (r.lhs_recurrence, r.lhs_closed, r.rhs_closed, r.det_value) == (value,) * 4
    assert r.agree


def test_recurrence_identity_sweep():
    for n in range(1, 16):
        seq = toeplitz_det_sequence(n, 40)
        for m in range(41):
            r = verify_recurrence_identity(n, m)
            assert r.agree
            assert seq[m] == comb(n + m - 1, m)


def test_series_file_round_trip():
    big = -(10**50)
    s = TruncatedSeries((1, big, 0))
    assert s.to_dict() == {"coeffs": ["1", str(big), "0"], "order": 2}
    assert TruncatedSeries.loads(s.dumps()) == s
    with pytest.raises(ValidationError):
        TruncatedSeries.from_dict({"coeffs": ["1", "2"], "order": 5})
    with pytest.raises(ValidationError):
        TruncatedSeries(())
