"""Integer matrices and two independent exact determinant engines."""

import json
from dataclasses import dataclass

from .exceptions import RangeError, ValidationError


@dataclass(frozen=True)
class DenseIntMatrix:
    """Row-major integer matrix. The 0x0 matrix is legal."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidationError(f"negative shape {self.rows}x{self.cols}")
        entries = tuple(self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValidationError(
                f"{len(entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        for x in entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"non-integer entry {x!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValidationError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self):
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self):
        return DenseIntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def to_dict(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [str(x) for x in self.entries],
        }

    @classmethod
    def from_dict(cls, doc):
        try:
            rows, cols, entries = int(doc["rows"]), int(doc["cols"]), doc["entries"]
            values = tuple(int(x) for x in entries)
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed matrix document: {exc}") from exc
        return cls(rows, cols, values)

    def dumps(self):
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))


class HessenbergMatrix(DenseIntMatrix):
    """Square matrix with entry(i, j) == 0 whenever i > j + 1 (0-indexed).

    With ``lower=True`` the transposed pattern is enforced instead
    (entry(i, j) == 0 whenever j > i + 1). Determinants and leading minors
    are unchanged by transposition, so the engines accept either.
    """

    def __init__(self, n, entries, lower=False):
        object.__setattr__(self, "lower", bool(lower))
        super().__init__(n, n, entries)

    def __post_init__(self):
        super().__post_init__()
        if self.rows != self.cols:
            raise ValidationError(f"not square: {self.rows}x{self.cols}")
        bad = _first_outside_band(self.rows, self.entries, self.lower)
        if bad is not None:
            i, j = bad
            kind = "lower" if self.lower else "upper"
            raise ValidationError(f"not {kind} Hessenberg: entry ({i}, {j}) = {self[i, j]}")

    def __repr__(self):
        return f"HessenbergMatrix(n={self.n}, rows={self.to_rows()}, lower={self.lower})"

    @property
    def n(self):
        return self.rows

    @classmethod
    def from_rows(cls, rows, lower=None):
        return cls.from_dense(DenseIntMatrix.from_rows(rows), lower=lower)

    @classmethod
    def from_dense(cls, m, lower=None):
        """Wrap a square matrix; ``lower=None`` accepts either orientation,
        preferring upper."""
        if m.rows != m.cols:
            raise ValidationError(f"not square: {m.rows}x{m.cols}")
        if lower is None:
            lower = (_first_outside_band(m.rows, m.entries, False) is not None
                     and _first_outside_band(m.rows, m.entries, True) is None)
        return cls(m.rows, m.entries, lower=lower)

    @classmethod
    def from_dict(cls, doc, lower=None):
        return cls.from_dense(DenseIntMatrix.from_dict(doc), lower=lower)

    def as_upper(self):
        if not self.lower:
            return self
        t = self.transpose()
        return HessenbergMatrix(t.rows, t.entries)

    def is_normalized(self):
        if self.lower:
            return all(self[i, i + 1] == 1 for i in range(self.n - 1))
        return all(self[i + 1, i] == 1 for i in range(self.n - 1))

    def leading(self, k):
        """Leading k x k block."""
        if not 0 <= k <= self.n:
            raise RangeError(f"block size {k} outside 0..{self.n}")
        return HessenbergMatrix(
            k, tuple(self[i, j] for i in range(k) for j in range(k)), lower=self.lower
        )


def _first_outside_band(n, entries, lower):
    for i in range(n):
        for j in range(n):
            outside = j > i + 1 if lower else i > j + 1
            if outside and entries[i * n + j] != 0:
                return i, j
    return None


def _as_hessenberg(H):
    if not isinstance(H, HessenbergMatrix):
        if not isinstance(H, DenseIntMatrix):
            H = DenseIntMatrix.from_rows(H)
        H = HessenbergMatrix.from_dense(H)
    return H.as_upper()


def _hessenberg_prefix_dets(H, k_max):
    # dets[k] = det of the leading k x k block, expanding along column k.
    dets = [1]
    for k in range(1, k_max + 1):
        col = k - 1
        total = 0
        sub = 1  # product of subdiagonal entries h[r+1, r] for r = row..k-2
        sign = 1
        for row in range(col, -1, -1):
            h = H[row, col]
            if h:
                total += sign * h * sub * dets[row]
            if row:
                sub *= H[row, row - 1]
                if not sub:
                    break
            sign = -sign
        dets.append(total)
    return dets


def det_hessenberg_recurrence(H) -> int:
    """Determinant of an upper Hessenberg matrix by cofactor expansion along
    the last column, reusing every leading-block determinant.

    The expansion runs over all rows 1..n including the top one, and carries
    the subdiagonal product, so it is exact for any Hessenberg input and not
    just the normalized (unit subdiagonal) case.
    """
    H = _as_hessenberg(H)
    return _hessenberg_prefix_dets(H, H.n)[-1]


def principal_minors(H, k_max: int) -> list:
    """[det of leading k x k block for k = 0..k_max], from one recurrence pass."""
    H = _as_hessenberg(H)
    if k_max < 0 or k_max > H.n:
        raise RangeError(f"k_max={k_max} outside 0..{H.n}")
    return _hessenberg_prefix_dets(H, k_max)


def det_bareiss(M) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    if not isinstance(M, DenseIntMatrix):
        M = DenseIntMatrix.from_rows(M)
    if M.rows != M.cols:
        raise ValidationError(f"not square: {M.rows}x{M.cols}")
    n = M.rows
    a = M.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1
