import random

import pytest

from catdet import (
    DenseIntMatrix,
    HessenbergMatrix,
    RangeError,
    ValidationError,
    det_bareiss,
    det_hessenberg_recurrence,
    principal_minors,
)
from catdet.verify import random_hessenberg

from oracles import leibniz_det

A4 = [[1, 0, 0, 0], [1, 2, 1, 0], [0, 1, 3, 3], [0, 0, 1, 4]]


@pytest.mark.parametrize("rows, expected", [
    ([], 1),
    ([[1, 0], [1, 2]], 2),
    ([[1, 0, 0], [1, 2, 1], [0, 1, 3]], 5),
    (A4, 14),
])
def test_recurrence_examples(rows, expected):
    assert leibniz_det(rows) == expected
    assert det_hessenberg_recurrence(rows) == expected


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1),
    ([[2, 1], [1, 2]], 3),
    ([[1, 2], [2, 4]], 0),
    ([], 1),
    ([[0, 1], [1, 0]], -1),
])
def test_bareiss_examples(rows, expected):
    assert det_bareiss(rows) == expected


def test_principal_minors_examples():
    assert principal_minors([[2, 1], [1, 2]], 2) == [1, 2, 3]
    assert principal_minors(A4, 4) == [1, 1, 2, 5, 14]
    assert principal_minors(A4, 0) == [1]
    with pytest.raises(RangeError):
        principal_minors(A4, 5)


def test_top_row_term_included():
    # a full top row contributes through the i = n cofactor term
    rows = [[1, 2, 3], [4, 5, 6], [0, 7, 8]]
    assert det_hessenberg_recurrence(rows) == leibniz_det(rows) == det_bareiss(rows)


def test_non_normalized_subdiagonal():
    rows = [[3, 1, 4], [2, 5, 9], [0, -6, 5]]
    assert det_hessenberg_recurrence(rows) == leibniz_det(rows)


def test_zero_subdiagonal():
    rows = [[1, 2, 3, 4], [5, 6, 7, 8], [0, 0, 9, 1], [0, 0, 2, 3]]
    assert det_hessenberg_recurrence(rows) == leibniz_det(rows)


def test_small_random_against_leibniz():
    rng = random.Random(7)
    for _ in range(200):
        H = random_hessenberg(rng, n_max=6)
        rows = H.to_rows()
        assert det_hessenberg_recurrence(H) == leibniz_det(rows)
        assert det_bareiss(H) == leibniz_det(rows)


def test_oracle_equivalence_and_invariants():
    rng = random.Random(11)
    for _ in range(150):
        H = random_hessenberg(rng, n_max=12)
        d = det_hessenberg_recurrence(H)
        assert d == det_bareiss(H)
        assert det_bareiss(H.transpose()) == det_bareiss(H)
        assert principal_minors(H, H.n)[H.n] == d


def test_bareiss_dense_random():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(0, 6)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(rows) == leibniz_det(rows)


def test_validation():
    with pytest.raises(ValidationError):
        HessenbergMatrix.from_rows([[1, 0, 0], [1, 1, 0], [1, 1, 1]], lower=False)
    with pytest.raises(ValidationError):
        det_hessenberg_recurrence([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    with pytest.raises(ValidationError):
        det_bareiss(DenseIntMatrix(2, 3, (1, 2, 3, 4, 5, 6)))
    with pytest.raises(ValidationError):
        DenseIntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValidationError):
        DenseIntMatrix.from_rows([[1, 2], [3]])


def test_lower_orientation():
    rows = [[1, 1, 0], [2, 1, 1], [3, 2, 1]]
    H = HessenbergMatrix.from_rows(rows)
    assert H.lower
    assert H.is_normalized()
    assert det_hessenberg_recurrence(H) == leibniz_det(rows)
    assert principal_minors(H, 3) == [1, 1, leibniz_det([[1, 1], [2, 1]]), leibniz_det(rows)]


def test_zero_by_zero_is_legal():
    m = DenseIntMatrix(0, 0, ())
    assert det_bareiss(m) == 1
    assert HessenbergMatrix(0, ()).n == 0


def test_file_round_trip():
    big = 10**60 + 7
    m = DenseIntMatrix.from_rows([[big, -big], [0, 3]])
    doc = m.to_dict()
    assert doc == {"rows": 2, "cols": 2, "entries": [str(big), str(-big), "0", "3"]}
    assert DenseIntMatrix.loads(m.dumps()) == m
    assert DenseIntMatrix.loads(m.dumps()).dumps() == m.dumps()
    H = HessenbergMatrix.from_dict(doc)
    assert H.to_dict() == doc


def test_malformed_document():
    with pytest.raises(ValidationError):
        DenseIntMatrix.from_dict({"rows": 1, "cols": 1, "entries": ["x"]})
    with pytest.raises(ValidationError):
        DenseIntMatrix.from_dict({"rows": 1})
