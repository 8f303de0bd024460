"""Lattice paths between nondecreasing height boundaries.

A path from (0, b_1) to (n, a_n) is identified with the nondecreasing
heights h_1 <= ... <= h_n of its horizontal steps, b_i <= h_i <= a_i.
"""

import json
from dataclasses import dataclass

from .exceptions import CapacityError, RangeError, ValidationError
from .hessmat import det_hessenberg_recurrence

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class BoundaryPair:
    a: tuple
    b: tuple

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        for x in a + b:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"non-integer height {x!r}")
        if len(a) != len(b):
            raise ValidationError(f"length mismatch: {len(a)} vs {len(b)}")
        if not a:
            raise ValidationError("boundaries must be non-empty")
        if any(x > y for x, y in zip(a, a[1:])):
            raise ValidationError(f"upper boundary not nondecreasing: {a}")
        if any(x > y for x, y in zip(b, b[1:])):
            raise ValidationError(f"lower boundary not nondecreasing: {b}")
        for i, (x, y) in enumerate(zip(a, b), 1):
            if x < y:
                raise ValidationError(f"a_{i}={x} < b_{i}={y}")

    @property
    def n(self):
        return len(self.a)

    def to_dict(self):
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_dict(cls, doc):
        try:
            return cls(tuple(int(x) for x in doc["a"]), tuple(int(x) for x in doc["b"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"malformed boundary document: {exc}") from exc

    def dumps(self):
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text):
        return cls.from_dict(json.loads(text))


def _coerce(bounds):
    return bounds if isinstance(bounds, BoundaryPair) else BoundaryPair(*bounds)


def count_paths_det(bounds) -> int:
    from .builders import build_path_matrix

    return det_hessenberg_recurrence(build_path_matrix(_coerce(bounds)))


def count_paths_dp(bounds) -> int:
    """Count height sequences by tabulating over (step, current height)."""
    bounds = _coerce(bounds)
    lo, hi = bounds.b[0], bounds.a[0]
    ways = {h: 1 for h in range(lo, hi + 1)}
    for lo, hi in zip(bounds.b[1:], bounds.a[1:]):
        nxt = {}
        running = sum(w for h, w in ways.items() if h < lo)
        for h in range(lo, hi + 1):
            running += ways.get(h, 0)
            nxt[h] = running
        ways = nxt
    return sum(ways.values())


def enumerate_paths(bounds, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """Every admissible height sequence, in lexicographic order."""
    bounds = _coerce(bounds)
    total = count_paths_dp(bounds)
    if total > cap:
        raise CapacityError(total, cap)
    a, b, n = bounds.a, bounds.b, bounds.n
    out = []
    prefix = []

    def walk(i, floor):
        if i == n:
            out.append(tuple(prefix))
            return
        for h in range(max(floor, b[i]), a[i] + 1):
            prefix.append(h)
            walk(i + 1, h)
            prefix.pop()

    walk(0, b[0])
    return out


def dyck_bounds(n: int) -> BoundaryPair:
    return BoundaryPair(tuple(range(n)), (0,) * n)


def count_dyck(n: int) -> int:
    """Dyck paths of semilength n via the determinant with a_i = i-1, b_i = 0."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return count_paths_det(dyck_bounds(n))
