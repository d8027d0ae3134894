"""Numerical evaluation of G_{r,v}(e^-z) near q = 1 and coefficient extraction.

``log G`` is summed from its Lambert-type expansions over odd l,

    log G_{r,1}(q) = 2 sum_{l odd} l^-1 sum_j q^{j^r l} = 2 sum_j artanh(q^{j^r}),
    log G_{r,2}(q) = 2 sum_{l odd} l^-1 sum_j q^{j^r l} / (1 + q^{j^r l}),

which are analytic in Re z > 0, so the value returned is the continuous
logarithm (no branch jumps). The inner l-sum for v = 1 is done in closed form.
Values of G itself overflow doubles long before the interesting regime, so
results are carried as :class:`ComplexEval` (log-modulus, argument).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, GuardError, PrecisionError, UnsupportedError
from .oracle import CountParams
from .quadrature import QuadratureSpec, integrate
from .reports import FAIL, INCONCLUSIVE, PASS, ScanReport

__all__ = [
    "ComplexEval",
    "QuadratureSpec",
    "CauchyResult",
    "log_G",
    "log_G_asym",
    "asym_residual_scan",
    "saddle_radius",
    "cauchy_integral",
    "cauchy_coefficient",
    "minor_arc_ys",
    "minor_arc_margin",
]

logger = logging.getLogger(__name__)

_EPS = np.finfo(float).eps
DEFAULT_TOL = 1e-12
DEFAULT_MARGIN = 5.0
CAUCHY_MAX_N = 500


def _wrap(theta: float) -> float:
    t = math.remainder(theta, 2.0 * math.pi)
    return math.pi if t <= -math.pi else t


@dataclass(frozen=True)
class ComplexEval:
    """exp(log_modulus + i argument), with argument normalised to (-pi, pi]."""

    log_modulus: float
    argument: float

    def __post_init__(self):
        if not (-math.pi < self.argument <= math.pi):
            object.__setattr__(self, "argument", _wrap(self.argument))

    @classmethod
    def from_log(cls, value: complex) -> "ComplexEval":
        value = complex(value)
        return cls(value.real, _wrap(value.imag))

    @property
    def log(self) -> complex:
        """A logarithm of the value (the principal one)."""
        return complex(self.log_modulus, self.argument)

    def to_complex(self) -> complex:
        """Materialise the value; raises OverflowError when it is not representable."""
        return math.exp(self.log_modulus) * complex(math.cos(self.argument), math.sin(self.argument))

    def conjugate(self) -> "ComplexEval":
        return ComplexEval(self.log_modulus, _wrap(-self.argument))


def _require_v12(params):
    if params.v not in (1, 2):
        raise UnsupportedError(f"generating function evaluation needs v in {{1, 2}}, got v = {params.v}")


def _cutoff(x_min, tol, margin):
    # discarded terms are each <= e^-T; their count is bounded through 1/(1 - e^-x)
    return math.log(1.0 / tol) + margin + math.log1p(1.0 / math.expm1(x_min))


def _log_G_values(params: CountParams, z, tol=DEFAULT_TOL, margin=DEFAULT_MARGIN):
    """Continuous log G_{r,v}(e^-z) for an array of z; also a rounding-error bound per point."""
    _require_v12(params)
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if not np.all(z.real > 0):
        raise DomainError("log_G needs Re(z) > 0")
    if not tol > 0:
        raise DomainError("tol must be positive")
    x_min = float(z.real.min())
    T = _cutoff(x_min, tol, margin)
    r = params.r
    jmax = int((T / x_min) ** (1.0 / r)) + 1
    a = np.arange(1, jmax + 1, dtype=float) ** r
    a = a[a * x_min <= T]
    total = np.zeros(z.shape, dtype=complex)
    weight = np.zeros(z.shape)  # sum |term| (1 + |phase|) for the rounding bound
    chunk = max(1, 400_000 // max(1, z.size))
    if params.v == 1:
        for s in range(0, len(a), chunk):
            az = a[s : s + chunk, None] * z[None, :]
            w = np.exp(-az)
            terms = np.log1p(w) - np.log(-np.expm1(-az))
            total += terms.sum(axis=0)
            weight += (np.abs(terms) * (1.0 + np.abs(az.imag))).sum(axis=0)
    else:
        ell = 1
        while len(a) and ell * a[0] * x_min <= T:
            al = ell * a[ell * a * x_min <= T]
            for s in range(0, len(al), chunk):
                az = al[s : s + chunk, None] * z[None, :]
                u = np.exp(-az)
                terms = (2.0 / ell) * (u / (1.0 + u))
                total += terms.sum(axis=0)
                weight += (np.abs(terms) * (1.0 + np.abs(az.imag))).sum(axis=0)
            ell += 2
    rounding = 8.0 * _EPS * weight
    return total, rounding


def log_G(params: CountParams, z: complex, tol: float = DEFAULT_TOL) -> ComplexEval:
    """log G_{r,v}(e^-z) for Re(z) > 0, with absolute error <= tol on the log scale.

    Raises
    ------
    DomainError
        If Re(z) <= 0.
    PrecisionError
        If double-precision rounding alone could exceed ``tol`` at this z.
    """
    values, rounding = _log_G_values(params, [z], tol)
    if rounding[0] > tol:
        raise PrecisionError(
            f"tol={tol:g} is below the rounding floor {rounding[0]:.2e} of log_G at z={z}"
        )
    return ComplexEval.from_log(values[0])


def _asym_log(params, z):
    sp = specfun.saddle_params(params)
    return sp.beta * np.log(z) + sp.kappa / sp.alpha * z ** (-sp.alpha) + math.log(sp.gamma)


def log_G_asym(params: CountParams, z: complex) -> ComplexEval:
    """The z -> 0 approximation beta log z + (kappa / alpha) z^-alpha + log gamma.

    Only defined for |arg z| <= pi/4, principal branches throughout.
    """
    _require_v12(params)
    z = complex(z)
    if z == 0 or abs(math.atan2(z.imag, z.real)) > math.pi / 4 + 1e-15:
        raise DomainError(f"log_G_asym needs z != 0 with |arg z| <= pi/4, got {z}")
    return ComplexEval.from_log(_asym_log(params, z))


# -- high-precision real-axis evaluators used by the residual scan ----------


def _mp_saddle(params, mp):
    r = mp.mpf(params.r)
    alpha = 1 / r
    kp = 2 / r * (1 - mp.power(2, -1 - alpha)) * mp.zeta(1 + alpha) * mp.gamma(1 + alpha)
    if params.v == 1:
        return alpha, mp.mpf(1) / 2, mp.power(2 ** (r + 1) * mp.pi**r, -0.5), kp
    return alpha, mp.mpf(1) / 4, mp.power(2**r * mp.pi ** (r + 1), -0.25), mp.altzeta(alpha) * kp


def _log_G_real_mp(params, x, dps):
    import mpmath

    mp = mpmath.mp
    with mpmath.workdps(dps + 15):
        x = mp.mpf(x)
        T = (dps + 5) * mp.log(10) + mp.log(1 + 1 / mp.expm1(x)) + 10
        r = params.r
        total = mp.mpf(0)
        j = 1
        while j**r * x <= T:
            w = mp.exp(-(j**r) * x)
            if params.v == 1:
                total += 2 * mp.atanh(w)
            else:
                ell = 1
                u = w
                w2 = w * w
                while ell * j**r * x <= T:
                    total += 2 * u / ((1 + u) * ell)
                    u *= w2
                    ell += 2
            j += 1
        return total


def _log_G_asym_real_mp(params, x, dps):
    import mpmath

    mp = mpmath.mp
    with mpmath.workdps(dps + 15):
        x = mp.mpf(x)
        alpha, beta, gamma, kap = _mp_saddle(params, mp)
        return beta * mp.log(x) + kap / alpha * x ** (-alpha) + mp.log(gamma)


def _residuals(params, xs, dps, tol):
    if dps is None:
        vals, rounding = _log_G_values(params, np.asarray(xs, dtype=complex), tol)
        out = []
        for x, lg, rnd in zip(xs, vals, rounding):
            asym = complex(_asym_log(params, complex(x)))
            delta = abs(lg.real - asym.real)
            floor = tol + rnd + 8.0 * _EPS * (abs(asym.real) + abs(lg.real))
            out.append((delta, floor))
        return out
    import mpmath

    out = []
    for x in xs:
        with mpmath.workdps(dps + 15):
            lg = _log_G_real_mp(params, x, dps)
            asym = _log_G_asym_real_mp(params, x, dps)
            delta = abs(lg - asym)
            floor = mpmath.mpf(10) ** (-dps) * max(1, abs(lg))
            if delta <= floor:
                out.append((float(delta), float(floor)))
            else:
                # keep magnitudes far below double range as (mantissa, log)
                out.append((delta, floor))
    return out


def _as_log(v):
    import mpmath

    return float(mpmath.log(v)) if not isinstance(v, float) else (math.log(v) if v > 0 else -math.inf)


def asym_residual_scan(
    params: CountParams,
    x_grid,
    p: float = 1.0,
    dps: int | str | None = "auto",
    tol: float = 1e-13,
) -> ScanReport:
    """Compare log G with its z -> 0 approximation along a decreasing real grid.

    The residual is Delta(x) = |log G(e^-x) - log_G_asym(x)|. The scan PASSes
    when Delta decreases along the grid and the least-squares slope of
    log Delta against log x is at least ``p``.

    The true remainder is smaller than any power of x, so in double precision
    it quickly drops under the rounding floor of the two evaluators. Such
    points are flagged ``floor_limited``, excluded from the slope, and checked
    for monotonicity only through interval bounds. ``dps=None`` runs in double
    precision; an integer runs both sides in mpmath at that many digits; the
    default ``"auto"`` doubles the precision from 40 digits until no point is
    floor limited (at most 1280 digits).
    """
    _require_v12(params)
    xs = [float(x) for x in x_grid]
    if not xs or any(x <= 0 for x in xs):
        raise DomainError("x_grid must be a nonempty list of positive reals")
    if any(b >= a for a, b in zip(xs, xs[1:])):
        raise DomainError("x_grid must be strictly decreasing")
    if dps == "auto":
        d = 40
        while True:
            res = _residuals(params, xs, d, tol)
            if all(delta > floor for delta, floor in res) or d >= 1280:
                break
            d *= 2
        used = d
    else:
        res = _residuals(params, xs, dps, tol)
        used = dps

    log_delta = [_as_log(delta) for delta, _ in res]
    log_floor = [_as_log(floor) for _, floor in res]
    resolved = [ld > lf for ld, lf in zip(log_delta, log_floor)]
    # interval check: the true residual lies in [max(D - F, 0), D + F]
    monotone = True
    for k in range(len(xs) - 1):
        up_k = max(log_delta[k], log_floor[k]) + math.log(2.0)
        if resolved[k + 1] and log_delta[k + 1] + math.log1p(-math.exp(log_floor[k + 1] - log_delta[k + 1])) > up_k:
            monotone = False
        if resolved[k] and resolved[k + 1] and log_delta[k + 1] > log_delta[k]:
            monotone = False
    pts = [(math.log(x), ld) for x, ld, ok in zip(xs, log_delta, resolved) if ok]
    slope = None
    if len(pts) >= 2:
        lx = np.array([q[0] for q in pts])
        ly = np.array([q[1] for q in pts])
        slope = float(np.polyfit(lx, ly, 1)[0])
    if len(xs) < 2 or slope is None:
        status = INCONCLUSIVE
    elif monotone and slope >= p:
        status = PASS
    else:
        status = FAIL
    return ScanReport(
        label=f"asym-residual r={params.r} v={params.v}",
        grid=xs,
        statistic=log_delta,
        worst=slope,
        threshold=p,
        status=status,
        slope=slope,
        extra={
            "residuals": [float(math.exp(ld)) if ld > -700 else 0.0 for ld in log_delta],
            "log_residuals": log_delta,
            "log_floor": log_floor,
            "floor_limited": [not ok for ok in resolved],
            "monotone": monotone,
            "dps": used,
        },
    )


# -- Cauchy coefficient extraction -------------------------------------------


def saddle_radius(params: CountParams, n: int) -> float:
    """x = (kappa / n)^(1/(1+alpha)), the circle radius exp(-x) used for extraction."""
    sp = specfun.saddle_params(params)
    return (sp.kappa / n) ** (1.0 / (1.0 + sp.alpha))


@dataclass(frozen=True)
class CauchyResult:
    value: float
    log_peak: float
    scaled_integral: complex  # (1/2pi) * integral of exp(L(y) - log_peak), both halves
    error: float
    x: float


def cauchy_integral(
    params: CountParams,
    n: int,
    quad: QuadratureSpec | None = None,
    *,
    full_range: bool = False,
    tol: float = DEFAULT_TOL,
    max_n: int = CAUCHY_MAX_N,
) -> CauchyResult:
    """Evaluate (1/2pi) int_{-pi}^{pi} G(e^{-x-iy}) e^{n(x+iy)} dy at the saddle radius.

    The integrand is formed in log scale and divided by its value at y = 0
    before quadrature. By default only [0, pi] is integrated and the real
    part doubled (the integrand at -y is the conjugate of that at +y);
    ``full_range=True`` integrates [-pi, pi] and keeps the imaginary part,
    which should vanish.
    """
    _require_v12(params)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > max_n:
        raise GuardError(f"n={n} exceeds the Cauchy extraction guard {max_n}")
    quad = quad or QuadratureSpec()
    sp = specfun.saddle_params(params)
    x = saddle_radius(params, n)
    peak_vals, _ = _log_G_values(params, [x], tol)
    log_peak = float(peak_vals[0].real) + n * x

    def integrand(y):
        z = x + 1j * np.asarray(y, dtype=float)
        vals, _ = _log_G_values(params, z, tol)
        return np.exp(vals + n * z - log_peak)

    width = x ** (1.0 + 0.5 * sp.alpha) / math.sqrt(sp.kappa * (1.0 + sp.alpha))
    if full_range:
        res = integrate(integrand, -math.pi, math.pi, quad, peak=0.0, width=width)
        scaled = res.value / (2.0 * math.pi)
    else:
        res = integrate(integrand, 0.0, math.pi, quad, peak=0.0, width=width)
        scaled = complex(res.value.real / math.pi, 0.0)
    value = math.exp(log_peak) * scaled.real
    return CauchyResult(value, log_peak, scaled, res.error, x)


def cauchy_coefficient(params: CountParams, n: int, quad: QuadratureSpec | None = None, **kwargs) -> float:
    """Numerical estimate of s_{r,v}(n) from the Cauchy integral at the saddle radius."""
    return cauchy_integral(params, n, quad, **kwargs).value


# -- minor arcs ----------------------------------------------------------------


def minor_arc_ys(x: float, y_samples: int = 400, max_den: int = 10) -> np.ndarray:
    """Angles in [x, pi]: a uniform grid plus 2 pi d / h for h <= max_den."""
    ys = set(np.linspace(x, math.pi, max(2, y_samples)).tolist())
    for h in range(2, max_den + 1):
        for d in range(1, h // 2 + 1):
            if math.gcd(d, h) == 1:
                y = 2.0 * math.pi * d / h
                if x <= y <= math.pi:
                    ys.add(y)
    return np.array(sorted(ys))


def minor_arc_margin(params: CountParams, x: float, y_samples: int = 400, tol: float = 1e-10):
    """Smallest x^(1/r) Re(log G(e^-x) - log G(e^-x-iy)) over sampled y in [x, pi].

    Returns ``(margin, y_at_minimum)``.
    """
    ys = minor_arc_ys(x, y_samples)
    vals, _ = _log_G_values(params, np.concatenate([[x], x + 1j * ys]), tol)
    drop = vals[0].real - vals[1:].real
    i = int(np.argmin(drop))
    margin = float(drop[i] * x ** (1.0 / params.r))
    logger.info("minor-arc margin r=%d v=%d x=%.6g: %.6g at y=%.6g", params.r, params.v, x, margin, ys[i])
    return margin, float(ys[i])
