"""Numerical evidence for the minor-arc estimates.

:func:`weyl_sum` computes S(y) = sum_{L < n <= 2L} e(n^r y) exactly in the
phase: a float y is the dyadic rational p / 2^k, so n^r y mod 1 is obtained in
integer arithmetic (uint64 wrap-around when k <= 64, Python integers
otherwise). Rational y can be passed as :class:`fractions.Fraction`. The
cosines and sines are then summed with :func:`math.fsum`.

The two scans report empirical constants; they are evidence, not proofs.
"""
from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .gfeval import minor_arc_margin
from .oracle import CountParams
from .reports import FAIL, INCONCLUSIVE, PASS, ScanReport

__all__ = [
    "ScanReport",
    "weyl_sum",
    "weyl_y_grid",
    "weyl_bound_scan",
    "ratio_lowerbound_scan",
]


def _phases(r: int, y, lo: int, hi: int) -> np.ndarray:
    """Fractional parts of n^r y for n = lo..hi, computed without rounding in the product."""
    frac = Fraction(y)
    p, q = frac.numerator, frac.denominator
    n = np.arange(lo, hi + 1, dtype=np.uint64)
    if q & (q - 1) == 0 and q <= 1 << 64:
        k = q.bit_length() - 1
        with np.errstate(over="ignore"):
            acc = np.ones_like(n)
            for _ in range(r):
                acc = acc * n
            prod = acc * np.uint64(p % (1 << 64))
        if k == 64:
            return prod.astype(np.float64) / 2.0**64
        mask = np.uint64((1 << k) - 1)
        return (prod & mask).astype(np.float64) / float(q)
    if q < 1 << 31:
        # generic rational: reduce n mod q first, then multiply stepwise mod q
        nm = (n % np.uint64(q)).astype(np.uint64)
        acc = np.ones_like(nm)
        for _ in range(r):
            acc = (acc * nm) % np.uint64(q)
        acc = (acc * np.uint64(p % q)) % np.uint64(q)
        return acc.astype(np.float64) / float(q)
    big = np.arange(lo, hi + 1).astype(object)
    rem = (big**r * p) % q
    # rem / q in float without converting huge integers one by one
    shift = max(0, q.bit_length() - 62)
    return (rem >> shift).astype(np.float64) / float(q >> shift)


def weyl_sum(r: int, y, L: float) -> complex:
    """sum over integers L < n <= 2L of exp(2 pi i n^r y)."""
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    if not (isinstance(L, (int, float, Fraction)) and L >= 1):
        raise DomainError(f"L must be >= 1, got {L!r}")
    lo, hi = math.floor(L) + 1, math.floor(2 * L)
    if hi < lo:
        return 0j
    t = 2.0 * math.pi * _phases(r, y, lo, hi)
    return complex(math.fsum(np.cos(t)), math.fsum(np.sin(t)))


def weyl_y_grid(r: int, L: float, y_samples: int = 200, max_den: int = 10) -> list:
    """Points in (L^-r, 1/2]: Farey fractions d/h (h <= max_den), their near
    neighbours d/h +- c L^-r, and a uniform fill. Everything outside the
    interval is dropped."""
    lo = float(L) ** -r
    ys = []
    for h in range(2, max_den + 1):
        for d in range(1, h // 2 + 1):
            if math.gcd(d, h) == 1:
                ys.append(Fraction(d, h))
                for c in (0.5, 1.0, 2.0):
                    ys += [d / h - c * lo, d / h + c * lo]
    ys += [lo * f for f in (1.000001, 1.5, 2.0, 4.0, 10.0)]
    ys += list(np.linspace(lo, 0.5, max(2, y_samples))[1:])
    out = sorted({y for y in ys if lo < float(y) <= 0.5}, key=float)
    return out


def weyl_bound_scan(r: int, L: float, y_samples: int = 200, delta: float = 0.05, max_den: int = 10) -> ScanReport:
    """max over the y grid of |S(y)| / L, compared with 1 - delta."""
    ys = weyl_y_grid(r, L, y_samples, max_den)
    if not ys:
        raise DomainError(f"no sample points in (L^-r, 1/2] for r={r}, L={L}")
    stats = [abs(weyl_sum(r, y, L)) / L for y in ys]
    worst = max(stats)
    i = stats.index(worst)
    return ScanReport(
        label=f"weyl r={r} L={L:g}",
        grid=[float(y) for y in ys],
        statistic=stats,
        worst=worst,
        threshold=1.0 - delta,
        status=PASS if worst <= 1.0 - delta else FAIL,
        extra={"empirical_delta": 1.0 - worst, "argmax_y": str(ys[i])},
    )


def ratio_lowerbound_scan(
    params: CountParams,
    x_grid,
    y_samples: int = 400,
    floor: float = 0.1,
) -> ScanReport:
    """For each x, x^(1/r) times the smallest Re(log G(e^-x) - log G(e^-x-iy)), y in [x, pi].

    PASS iff every value is at least ``floor``.
    """
    xs = [float(x) for x in x_grid]
    if not xs or any(x <= 0 for x in xs):
        raise DomainError("x_grid must hold positive reals")
    if any(b >= a for a, b in zip(xs, xs[1:])):
        raise DomainError("x_grid must be strictly decreasing")
    stats, argmins = [], []
    for x in xs:
        c, y = minor_arc_margin(params, x, y_samples)
        stats.append(c)
        argmins.append(y)
    worst = min(stats)
    return ScanReport(
        label=f"ratio-lowerbound r={params.r} v={params.v}",
        grid=xs,
        statistic=stats,
        worst=worst,
        threshold=floor,
        status=PASS if worst >= floor else FAIL,
        extra={"argmin_y": argmins},
    )
