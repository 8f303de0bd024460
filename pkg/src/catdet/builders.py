"""Constructors for the deformed Pascal, Toeplitz-Hessenberg and path
matrices, plus the square Pascal table emitter."""

import csv
import io
from dataclasses import dataclass

from .combinat import binomial
from .exceptions import RangeError
from .hessmat import HessenbergMatrix


def build_deformed_pascal(n: int) -> HessenbergMatrix:
    """n x n matrix with entry(i, j) = C(i+1, j-i+1), 0-indexed.

    Row i carries C(i+1, 0..i+1) starting one column left of the diagonal;
    its leading minors are the Catalan numbers. n = 0 gives the empty matrix.
    """
    if n < 0:
        raise RangeError(f"n={n} must be >= 0")
    return HessenbergMatrix(
        n, tuple(binomial(i + 1, j - i + 1) for i in range(n) for j in range(n))
    )


def build_toeplitz_hessenberg(n: int, m: int) -> HessenbergMatrix:
    """m x m Toeplitz matrix with entry(i, j) = C(n, i-j+1).

    The first column is C(n, 1..n) and the superdiagonal is all ones, so the
    result is lower Hessenberg. Any m >= 1 is accepted, not only m >= n:
    the leading minors are wanted at every order.
    """
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    if m < 1:
        raise RangeError(f"m={m} must be >= 1")
    band = [binomial(n, t) for t in range(m + 1)]  # indexed by i-j+1
    return HessenbergMatrix(
        m,
        tuple(band[i - j + 1] if i - j + 1 >= 0 else 0 for i in range(m) for j in range(m)),
        lower=True,
    )


def _path_binomial(top, k):
    # A negative top only occurs above the superdiagonal (a_i < b_j - 1) and
    # must contribute 0 for the path count to come out right.
    return binomial(top, k) if top >= 0 else 0


def build_path_matrix(bounds) -> HessenbergMatrix:
    """n x n matrix with entry(i, j) = C(a_i - b_j + 1, j - i + 1)."""
    from .lattice import BoundaryPair

    if not isinstance(bounds, BoundaryPair):
        bounds = BoundaryPair(*bounds)
    a, b = bounds.a, bounds.b
    n = len(a)
    return HessenbergMatrix(
        n,
        tuple(_path_binomial(a[i] - b[j] + 1, j - i + 1) for i in range(n) for j in range(n)),
    )


@dataclass(frozen=True)
class PascalTable:
    """Square arrangement of Pascal's triangle, entry(r, c) = C(r+c, c).

    The arrangement is symmetric, so the highlighted column also reads
    along the row of the same index.
    """

    values: tuple
    highlight_col: int

    @property
    def n_rows(self):
        return len(self.values)

    @property
    def n_cols(self):
        return len(self.values[0]) if self.values else 0

    def highlighted(self):
        return [row[self.highlight_col] for row in self.values]

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["row"] + [f"c{c}" for c in range(self.n_cols)] + ["highlight"])
        for r, row in enumerate(self.values):
            w.writerow([r] + list(row) + [row[self.highlight_col]])
        return buf.getvalue()

    def to_text(self):
        cells = [
            [f"[{v}]" if c == self.highlight_col else str(v) for c, v in enumerate(row)]
            for row in self.values
        ]
        widths = [max(len(r[c]) for r in cells) for c in range(self.n_cols)]
        lines = [
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
            for row in cells
        ]
        return "\n".join(lines) + "\n"

    def to_dict(self):
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "highlight_col": self.highlight_col,
            "values": [[str(v) for v in row] for row in self.values],
            "highlighted": [str(v) for v in self.highlighted()],
        }


def pascal_table(rows: int, highlight_col: int, cols=None) -> PascalTable:
    """Pascal table with `rows` rows; width defaults to fit both the square
    and the highlighted column."""
    if rows < 1:
        raise RangeError(f"rows={rows} must be >= 1")
    if highlight_col < 0:
        raise RangeError(f"highlight_col={highlight_col} must be >= 0")
    if cols is None:
        cols = max(rows, highlight_col + 1)
    elif cols <= highlight_col:
        raise RangeError(f"cols={cols} does not include column {highlight_col}")
    values = tuple(
        tuple(binomial(r + c, c) for c in range(cols)) for r in range(rows)
    )
    return PascalTable(values, highlight_col)
