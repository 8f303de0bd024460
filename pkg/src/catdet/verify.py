"""Identity sweeps producing structured pass/fail reports."""

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .builders import build_toeplitz_hessenberg, pascal_table
from .catalan import catalan_det, catalan_mingantu_prefix
from .combinat import binomial, catalan_closed
from .exceptions import RangeError
from .hessmat import HessenbergMatrix, det_bareiss, det_hessenberg_recurrence, principal_minors
from .lattice import BoundaryPair, count_dyck, count_paths_det, count_paths_dp
from .series import (
    binomial_power,
    convolve,
    reciprocal,
    reciprocal_via_minors,
    verify_convolution_identity,
    verify_recurrence_identity,
)

IDENTITIES = ("thm1", "thm2", "thm3", "prop_a", "prop_b", "prop_c", "prop_d", "recip", "hessdet")

DEFAULT_SEED = 20240601


@dataclass
class VerificationReport:
    identity_id: str
    swept_ranges: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def record(self, params, expected, actual):
        self.checked += 1
        if expected != actual:
            self.failures.append(
                {"params": params, "expected": _stringify(expected), "actual": _stringify(actual)}
            )

    def to_dict(self):
        return {
            "identity": self.identity_id,
            "swept_ranges": self.swept_ranges,
            "checked": self.checked,
            "failures": self.failures,
            "status": "pass" if self.passed else "fail",
        }


def _stringify(value):
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


def _threads():
    try:
        return max(1, int(os.environ.get("CATDET_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    # results come back in input order, so reports are deterministic
    items = list(items)
    workers = _threads()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def random_boundary_pair(rng, n_max=8, lower_max=5, step_max=5):
    """Random valid BoundaryPair with heights in [0, lower_max + step_max]."""
    while True:
        n = rng.randint(1, n_max)
        b = sorted(rng.randint(0, lower_max) for _ in range(n))
        a = sorted(x + rng.randint(0, step_max) for x in b)
        a = [max(x, y) for x, y in zip(a, b)]
        try:
            return BoundaryPair(tuple(a), tuple(b))
        except ValueError:
            continue


def random_hessenberg(rng, n_max=12, lo=-9, hi=9):
    n = rng.randint(0, n_max)
    return HessenbergMatrix(
        n,
        tuple(rng.randint(lo, hi) if i <= j + 1 else 0 for i in range(n) for j in range(n)),
    )


def random_unit_series(rng, order_max=30, lo=-9, hi=9):
    order = rng.randint(0, order_max)
    return (1,) + tuple(rng.randint(lo, hi) for _ in range(order))


def verify_thm1(n_max=30):
    rep = VerificationReport("thm1", {"n": [1, n_max]})
    for n, value in zip(range(1, n_max + 1), _ordered_map(catalan_det, range(1, n_max + 1))):
        rep.record({"n": n}, catalan_closed(n), value)
    return rep


def verify_thm2(n_max=500):
    rep = VerificationReport("thm2", {"n": [1, n_max]})
    prefix = catalan_mingantu_prefix(n_max)
    for n in range(1, n_max + 1):
        rep.record({"n": n}, catalan_closed(n), prefix[n])
    return rep


def verify_thm3(trials=200, n_max=8, dyck_max=25, seed=DEFAULT_SEED):
    rep = VerificationReport(
        "thm3",
        {"trials": trials, "n": [1, n_max], "dyck_n": [1, dyck_max], "seed": seed},
    )
    rng = random.Random(seed)
    pairs = [random_boundary_pair(rng, n_max) for _ in range(trials)]
    dets = _ordered_map(count_paths_det, pairs)
    for p, d in zip(pairs, dets):
        rep.record({"a": list(p.a), "b": list(p.b)}, count_paths_dp(p), d)
    for n in range(1, dyck_max + 1):
        rep.record({"dyck_n": n}, catalan_closed(n), count_dyck(n))
    return rep


def _toeplitz_minors(n, k_max):
    if k_max == 0:
        return [1]
    return principal_minors(build_toeplitz_hessenberg(n, k_max), k_max)


def verify_prop_a(n_max=20, k_max=40):
    rep = VerificationReport("prop_a", {"n": [1, n_max], "k": [0, k_max]})
    all_minors = _ordered_map(lambda n: _toeplitz_minors(n, k_max), range(1, n_max + 1))
    for n, minors in zip(range(1, n_max + 1), all_minors):
        for k in range(k_max + 1):
            rep.record({"n": n, "k": k}, binomial(n + k - 1, k), minors[k])
    return rep


def verify_prop_b(n_max=20, k_max=40):
    """Minor sequence M_{n,0..k_max} against column n-1 of the square Pascal table."""
    rep = VerificationReport("prop_b", {"n": [1, n_max], "k": [0, k_max]})
    table = pascal_table(k_max + 1, n_max - 1)
    for n in range(1, n_max + 1):
        column = [row[n - 1] for row in table.values]
        rep.record({"n": n}, column, _toeplitz_minors(n, k_max))
    return rep


def verify_prop_c(n_max=20, k_max=40):
    rep = VerificationReport("prop_c", {"n": [1, n_max], "k": [0, k_max]})
    for n in range(1, n_max + 1):
        for k in range(k_max + 1):
            rep.record({"n": n, "k": k}, 1 if k == 0 else 0, verify_convolution_identity(n, k))
    return rep


def verify_prop_d(n_max=15, m_max=40):
    rep = VerificationReport("prop_d", {"n": [1, n_max], "m": [0, m_max]})
    for n in range(1, n_max + 1):
        for m in range(m_max + 1):
            r = verify_recurrence_identity(n, m)
            values = [r.lhs_recurrence, r.lhs_closed, r.det_value]
            rep.record({"n": n, "m": m}, [r.rhs_closed] * 3, values)
    return rep


def verify_recip(trials=100, order_max=30, n_max=12, k_max=50, seed=DEFAULT_SEED):
    rep = VerificationReport(
        "recip",
        {"trials": trials, "order": [0, order_max], "n": [1, n_max], "k": [0, k_max], "seed": seed},
    )
    rng = random.Random(seed)
    for _ in range(trials):
        f = random_unit_series(rng, order_max)
        order = len(f) - 1
        g = reciprocal(f, order)
        rep.record({"f": list(f)}, [1] + [0] * order, list(convolve(f, g, order).coeffs))
    for n in range(1, n_max + 1):
        direct = reciprocal(binomial_power(n, k_max), k_max).coeffs
        minors = reciprocal_via_minors(n, k_max).coeffs
        closed = [(-1) ** k * binomial(n + k - 1, k) for k in range(k_max + 1)]
        rep.record({"n": n, "route": "direct"}, closed, list(direct))
        rep.record({"n": n, "route": "minors"}, closed, list(minors))
    return rep


def verify_hessdet(trials=100, n_max=12, seed=DEFAULT_SEED):
    rep = VerificationReport("hessdet", {"trials": trials, "n": [0, n_max], "seed": seed})
    rng = random.Random(seed)
    for _ in range(trials):
        H = random_hessenberg(rng, n_max)
        rep.record({"rows": H.to_rows()}, det_bareiss(H), det_hessenberg_recurrence(H))
    return rep


def run_identity(identity, n_max=None, k_max=None, m_max=None, trials=None,
                 seed=DEFAULT_SEED, dyck_max=None):
    """Dispatch one sweep; unset range arguments fall back to the defaults."""

    def pick(**kw):
        return {k: v for k, v in kw.items() if v is not None}

    if identity == "thm1":
        return verify_thm1(**pick(n_max=n_max))
    if identity == "thm2":
        return verify_thm2(**pick(n_max=n_max))
    if identity == "thm3":
        return verify_thm3(seed=seed, **pick(trials=trials, n_max=n_max, dyck_max=dyck_max))
    if identity == "prop_a":
        return verify_prop_a(**pick(n_max=n_max, k_max=k_max))
    if identity == "prop_b":
        return verify_prop_b(**pick(n_max=n_max, k_max=k_max))
    if identity == "prop_c":
        return verify_prop_c(**pick(n_max=n_max, k_max=k_max))
    if identity == "prop_d":
        return verify_prop_d(**pick(n_max=n_max, m_max=m_max))
    if identity == "recip":
        return verify_recip(seed=seed, **pick(trials=trials, n_max=n_max, k_max=k_max,
                                              order_max=m_max))
    if identity == "hessdet":
        return verify_hessdet(seed=seed, **pick(trials=trials, n_max=n_max))
    raise RangeError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
