"""Exact binomial coefficients and the closed-form Catalan number."""

from .exceptions import DomainError


def _check_index(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")


def binomial(n: int, k: int) -> int:
    """Return C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.

    Uses the multiplicative formula with exact division at every step, so
    intermediates never exceed C(n, k) * k.
    """
    _check_index("n", n)
    _check_index("k", k)
    if n < 0:
        raise DomainError(f"negative upper index n={n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def catalan_closed(n: int) -> int:
    """C(2n, n) / (n + 1)."""
    _check_index("n", n)
    if n < 0:
        raise DomainError(f"negative index n={n}")
    q, r = divmod(binomial(2 * n, n), n + 1)
    assert r == 0
    return q
