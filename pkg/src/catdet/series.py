"""Truncated integer power series and the binomial identities carried by
the reciprocal of (1+z)^n."""

import json
from dataclasses import dataclass

from .builders import build_toeplitz_hessenberg
from .combinat import binomial
from .exceptions import DomainError, RangeError, ValidationError
from .hessmat import det_hessenberg_recurrence, principal_minors


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_order of a power series modulo z^(order+1)."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValidationError("a series needs at least the constant term")
        for x in coeffs:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"non-integer coefficient {x!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k <= self.order else 0

    def truncate(self, order):
        return TruncatedSeries(tuple(self[k] for k in range(order + 1)))

    def to_dict(self):
        return {"coeffs": [str(c) for c in self.coeffs], "order": self.order}

    @classmethod
    def from_dict(cls, doc):
        try:
            coeffs = tuple(int(c) for c in doc["coeffs"])
            order = int(doc.get("order", len(coeffs) - 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed series document: {exc}") from exc
        if order != len(coeffs) - 1:
            raise ValidationError(f"order {order} does not match {len(coeffs)} coefficients")
        return cls(coeffs)

    def dumps(self):
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))


def _as_series(f):
    return f if isinstance(f, TruncatedSeries) else TruncatedSeries(tuple(f))


def convolve(f, g, order=None) -> TruncatedSeries:
    """Product f*g truncated to `order` (default: the smaller input order)."""
    f, g = _as_series(f), _as_series(g)
    if order is None:
        order = min(f.order, g.order)
    return TruncatedSeries(
        tuple(sum(f[i] * g[k - i] for i in range(k + 1)) for k in range(order + 1))
    )


def binomial_power(n: int, order: int) -> TruncatedSeries:
    """(1+z)^n up to z^order."""
    if n < 0 or order < 0:
        raise RangeError(f"n={n}, order={order} must both be >= 0")
    return TruncatedSeries(tuple(binomial(n, k) for k in range(order + 1)))


def reciprocal(f, order: int) -> TruncatedSeries:
    """1/f modulo z^(order+1). The constant term of f must be exactly 1."""
    f = _as_series(f)
    if f[0] != 1:
        raise DomainError(f"constant term {f[0]} != 1")
    if order < 0:
        raise RangeError(f"order={order} must be >= 0")
    g = [1]
    for k in range(1, order + 1):
        g.append(-sum(f[i] * g[k - i] for i in range(1, min(k, f.order) + 1)))
    return TruncatedSeries(tuple(g))


def reciprocal_via_minors(n: int, order: int) -> TruncatedSeries:
    """Coefficients (-1)^k M_{n,k}, M_{n,k} the leading k x k minor of the
    Toeplitz-Hessenberg matrix of (1+z)^n."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    if order < 0:
        raise RangeError(f"order={order} must be >= 0")
    if order == 0:
        return TruncatedSeries((1,))
    minors = principal_minors(build_toeplitz_hessenberg(n, order), order)
    return TruncatedSeries(tuple(-m if k % 2 else m for k, m in enumerate(minors)))


def verify_convolution_identity(n: int, k: int) -> int:
    """Raw sum_{i=0}^{k} (-1)^i C(n+i-1, i) C(n, k-i).

    Zero for k >= 1; the k = 0 sum is 1 since it is the constant term of
    (1+z)^n / (1+z)^n.
    """
    if n < 1 or k < 0:
        raise RangeError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    total = 0
    for i in range(k + 1):
        term = binomial(n + i - 1, i) * binomial(n, k - i)
        total += -term if i % 2 else term
    return total


@dataclass(frozen=True)
class RecurrenceCheck:
    lhs_recurrence: int
    lhs_closed: int
    rhs_closed: int
    det_value: int

    @property
    def agree(self):
        return self.lhs_recurrence == self.lhs_closed == self.rhs_closed == self.det_value

    def to_dict(self):
        return {
            "lhs_recurrence": str(self.lhs_recurrence),
            "lhs_closed": str(self.lhs_closed),
            "rhs_closed": str(self.rhs_closed),
            "det_value": str(self.det_value),
            "agree": self.agree,
        }


def toeplitz_det_sequence(n: int, m_max: int) -> list:
    """[J_{n,0}, ..., J_{n,m_max}] from J_{n,m} = sum_h (-1)^(h+1) C(n,h) J_{n,m-h}."""
    J = [1]
    for m in range(1, m_max + 1):
        total = 0
        for h in range(1, min(n, m) + 1):
            term = binomial(n, h) * J[m - h]
            total += term if h % 2 else -term
        J.append(total)
    return J


def verify_recurrence_identity(n: int, m: int) -> RecurrenceCheck:
    """Evaluate the Toeplitz determinant J_{n,m} four ways.

    lhs_recurrence builds J_{n,m} from lower orders by the alternating
    binomial recurrence (J_{n,0} = 1, h capped at min(n, m)); lhs_closed is
    the same sum with each J_{n,m-h} replaced by C(n+m-h-1, m-h);
    rhs_closed is C(n+m-1, m); det_value is the direct determinant.
    """
    if n < 1 or m < 0:
        raise RangeError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    lhs_rec = toeplitz_det_sequence(n, m)[m]
    if m == 0:
        lhs_closed = 1
        det_value = 1
    else:
        lhs_closed = 0
        for h in range(1, min(n, m) + 1):
            term = binomial(n, h) * binomial(n + m - h - 1, m - h)
            lhs_closed += term if h % 2 else -term
        det_value = det_hessenberg_recurrence(build_toeplitz_hessenberg(n, m))
    return RecurrenceCheck(lhs_rec, lhs_closed, binomial(n + m - 1, m), det_value)
