"""Catalan numbers by the Hessenberg determinant and by Ming Antu's
alternating binomial recurrence."""

from .builders import build_deformed_pascal
from .combinat import binomial
from .exceptions import DomainError, RangeError
from .hessmat import det_hessenberg_recurrence


def catalan_det(n: int) -> int:
    """Determinant of the n x n deformed Pascal matrix (1 for n = 0)."""
    if n < 0:
        raise DomainError(f"n={n} must be >= 0")
    return det_hessenberg_recurrence(build_deformed_pascal(n))


def catalan_mingantu_prefix(n: int) -> list:
    """[C_0, ..., C_n] from C_k = sum_{j>=1} (-1)^(j-1) C_{k-j} C(k-j+1, j).

    Terms vanish once j > k-j+1, so the inner sum stops there.
    """
    if n < 0:
        raise DomainError(f"n={n} must be >= 0")
    c = [1, 1][: n + 1]
    for k in range(2, n + 1):
        total = 0
        j = 1
        while k - j + 1 >= j:
            term = c[k - j] * binomial(k - j + 1, j)
            total += term if j % 2 else -term
            j += 1
        c.append(total)
    return c


def catalan_mingantu(n: int) -> int:
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return catalan_mingantu_prefix(n)[n]
