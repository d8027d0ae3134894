"""Exact power-series coefficients of G_{r,v}(q) = sum_n s_{r,v}(n) q^n.

Three routes produce the same table:

``direct-product``
    Multiplies the theta-like factors sum_{k in Z} q^{j^r |k|^v} for every j
    with j^r <= N. Works for any v.
``prop1-v1``
    The closed product prod_n (1 + q^{n^r}) / (1 - q^{n^r}).
``prop1-v2``
    The double product over (n, j) of
    (1 - (-1)^n q^{n j^r}) / (1 + (-1)^n q^{n j^r}).

Coefficients are Python integers held in numpy object arrays, so every
operation is exact; vectorised shifts keep the per-factor cost O(N).
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError, GuardError, UnsupportedError
from .oracle import CountParams

__all__ = [
    "CoeffTable",
    "MAX_UPTO",
    "theta_factor",
    "coeffs_direct",
    "coeffs_prop1_v1",
    "coeffs_prop1_v2",
    "coeffs",
]

MAX_UPTO = 200_000

METHODS = ("direct-product", "prop1-v1", "prop1-v2")


@dataclass(frozen=True)
class CoeffTable:
    """Exact s_{r,v}(0..upto) together with the algorithm that produced it."""

    params: CountParams
    upto: int
    coeffs: tuple[int, ...]
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method tag {self.method!r}")
        if len(self.coeffs) != self.upto + 1:
            raise ConsistencyError("coefficient count does not match truncation order")
        if self.coeffs[0] != 1:
            raise ConsistencyError(f"constant term must be 1, got {self.coeffs[0]}")
        for n, c in enumerate(self.coeffs):
            if c < 0:
                raise ConsistencyError(f"negative coefficient at n={n} ({self.method})")
            if n and c & 1:
                raise ConsistencyError(f"odd coefficient at n={n} ({self.method})")

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "s"])
        for n, c in enumerate(self.coeffs):
            writer.writerow([n, str(c)])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "params": {"r": self.params.r, "v": self.params.v},
                "upto": self.upto,
                "method": self.method,
                "coeffs": [str(c) for c in self.coeffs],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CoeffTable":
        data = json.loads(text)
        return cls(
            CountParams(**data["params"]),
            int(data["upto"]),
            tuple(int(c) for c in data["coeffs"]),
            data["method"],
        )


def _check_upto(upto, max_upto):
    if not isinstance(upto, int) or isinstance(upto, bool) or upto < 0:
        raise DomainError(f"upto must be a nonnegative integer, got {upto!r}")
    if upto > max_upto:
        raise GuardError(f"upto={upto} exceeds the resource guard {max_upto}")


def _unit(upto):
    c = np.zeros(upto + 1, dtype=object)
    c[0] = 1
    return c


def _times_one_plus(c, a, sign=1):
    """c * (1 + sign q^a), truncated."""
    if a < len(c):
        if sign > 0:
            c[a:] = c[a:] + c[:-a]
        else:
            c[a:] = c[a:] - c[:-a]
    return c


def _over_one_minus(c, a):
    """c / (1 - q^a): the prefix recurrence c[i] += c[i - a], done row-wise."""
    n1 = len(c)
    if a >= n1:
        return c
    rows = -(-n1 // a)
    buf = np.zeros(rows * a, dtype=object)
    buf[:n1] = c
    return np.cumsum(buf.reshape(rows, a), axis=0).ravel()[:n1]


def _over_one_plus(c, a):
    """c / (1 + q^a): the recurrence c[i] -= c[i - a], done row-wise."""
    n1 = len(c)
    if a >= n1:
        return c
    rows = -(-n1 // a)
    buf = np.zeros(rows * a, dtype=object)
    buf[:n1] = c
    sign = np.where(np.arange(rows) % 2 == 0, 1, -1).astype(object)[:, None]
    out = sign * np.cumsum(sign * buf.reshape(rows, a), axis=0)
    return out.ravel()[:n1]


def theta_factor(params: CountParams, j: int, upto: int) -> list[tuple[int, int]]:
    """Sparse coefficients of sum_{k in Z} q^{j^r |k|^v}, truncated at degree ``upto``.

    Returns ``[(0, 1), (e1, 2), (e2, 2), ...]`` with e_m = j^r m^v <= upto.
    """
    if not isinstance(j, int) or j < 1:
        raise DomainError(f"j must be a positive integer, got {j!r}")
    _check_upto(upto, MAX_UPTO)
    step = j**params.r
    terms = [(0, 1)]
    m = 1
    while step * m**params.v <= upto:
        terms.append((step * m**params.v, 2))
        m += 1
    return terms


def _times_sparse(c, terms):
    acc = np.zeros_like(c)
    n1 = len(c)
    # group shifts by coefficient so each group costs one extra multiply
    by_coef: dict[int, list[int]] = {}
    for e, coef in terms:
        by_coef.setdefault(coef, []).append(e)
    for coef, exps in by_coef.items():
        part = np.zeros_like(c)
        for e in exps:
            if e == 0:
                part += c
            elif e < n1:
                part[e:] += c[: n1 - e]
        acc += part if coef == 1 else coef * part
    return acc


def coeffs_direct(params: CountParams, upto: int, max_upto: int = MAX_UPTO) -> CoeffTable:
    """s_{r,v}(0..upto) as the product of the theta factors for j = 1, 2, ...

    Valid for every v >= 1; this is the only route for v > 2.
    """
    _check_upto(upto, max_upto)
    c = _unit(upto)
    j = 1
    while j**params.r <= upto:
        c = _times_sparse(c, theta_factor(params, j, upto))
        j += 1
    return CoeffTable(params, upto, tuple(int(x) for x in c), "direct-product")


def coeffs_prop1_v1(r: int, upto: int, max_upto: int = MAX_UPTO) -> CoeffTable:
    """s_{r,1}(0..upto) from prod_{n>=1} (1 + q^{n^r}) / (1 - q^{n^r})."""
    params = CountParams(r, 1)
    _check_upto(upto, max_upto)
    c = _unit(upto)
    n = 1
    while n**r <= upto:
        a = n**r
        c = _over_one_minus(c, a)
        c = _times_one_plus(c, a)
        n += 1
    return CoeffTable(params, upto, tuple(int(x) for x in c), "prop1-v1")


def coeffs_prop1_v2(r: int, upto: int, max_upto: int = MAX_UPTO) -> CoeffTable:
    """s_{r,2}(0..upto) from the double product over (n, j) with n j^r <= upto.

    For odd n the factor is (1 + q^a) / (1 - q^a), for even n it is
    (1 - q^a) / (1 + q^a), with a = n j^r. Intermediate coefficients are
    signed; the final table is checked to be nonnegative.
    """
    params = CountParams(r, 2)
    _check_upto(upto, max_upto)
    c = _unit(upto)
    j = 1
    while j**r <= upto:
        n = 1
        while n * j**r <= upto:
            a = n * j**r
            if n % 2:
                c = _times_one_plus(_over_one_minus(c, a), a, +1)
            else:
                c = _times_one_plus(_over_one_plus(c, a), a, -1)
            n += 1
        j += 1
    for i, x in enumerate(c):
        if x < 0:
            raise ConsistencyError(f"prop1-v2 produced a negative coefficient at n={i}")
    return CoeffTable(params, upto, tuple(int(x) for x in c), "prop1-v2")


def coeffs(params: CountParams, upto: int, method: str = "auto", max_upto: int = MAX_UPTO) -> CoeffTable:
    """Dispatch to a coefficient route.

    ``method`` is ``"direct"``, ``"prop1"`` or ``"auto"``. ``"auto"`` picks the
    fastest exact route: the closed product for v = 1 and the theta-factor
    product otherwise (for v = 2 it has O(sqrt(N)) terms per factor, against
    O(N log N) factors for the double product).
    """
    if method == "direct":
        return coeffs_direct(params, upto, max_upto)
    if method == "prop1":
        if params.v == 1:
            return coeffs_prop1_v1(params.r, upto, max_upto)
        if params.v == 2:
            return coeffs_prop1_v2(params.r, upto, max_upto)
        raise UnsupportedError(f"no closed product identity for v = {params.v} (only v in {{1, 2}})")
    if method == "auto":
        if params.v == 1:
            return coeffs_prop1_v1(params.r, upto, max_upto)
        return coeffs_direct(params, upto, max_upto)
    raise DomainError(f"unknown method {method!r}; expected direct, prop1 or auto")
