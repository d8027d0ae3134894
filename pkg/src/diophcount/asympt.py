"""Large-n approximations of s_{r,v}(n).

Two levels of approximation are provided, both returned in log scale:

* the uniform formula built on the integral
  W_{a,b}(lam) = (1/2pi) int_{-1}^{1} (1+iu)^b exp(lam (a^-1 (1+iu)^-a + 1 + iu)) du,
  evaluated by quadrature (:func:`s_asym_theorem`);
* its leading-order saddle-point reduction (:func:`s_asym_leading`).

Every formula is also available in the generic (alpha, beta, gamma, kappa)
parametrisation so the two can be checked against each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, QuadratureError, UnsupportedError
from .oracle import CountParams
from .quadrature import QuadratureSpec, integrate

__all__ = [
    "AsymEstimate",
    "W_quadrature",
    "W_saddle_leading",
    "w_argument",
    "s_asym_theorem",
    "s_asym_generic",
    "s_asym_leading",
    "s_asym_generic_leading",
    "relative_error",
]

_W_QUAD = QuadratureSpec(abs_tol=1e-15, rel_tol=1e-12)


@dataclass(frozen=True)
class AsymEstimate:
    """An estimate of s_{r,v}(n) stored as its natural logarithm."""

    value_log: float
    formula: str

    @property
    def value(self) -> float | None:
        """exp(value_log), or None when that overflows a double."""
        return math.exp(self.value_log) if self.value_log < 709.0 else None

    def to_dict(self) -> dict:
        d = {"formula": self.formula, "value_log": self.value_log}
        if self.value is not None:
            d["value"] = self.value
        return d


def _check_positive(**kw):
    for name, val in kw.items():
        if not (isinstance(val, (int, float)) and math.isfinite(val) and val > 0):
            raise DomainError(f"{name} must be a positive real, got {val!r}")


def W_quadrature(alpha: float, beta: float, lam: float, quad: QuadratureSpec | None = None) -> float:
    """Natural log of W_{alpha,beta}(lam), by quadrature.

    The factor exp((1 + 1/alpha) lam), the integrand's modulus at the saddle
    u = 0, is taken out analytically; the remaining integrand is folded onto
    [0, 1] using its conjugate symmetry in u.
    """
    _check_positive(alpha=alpha, beta=beta, lam=lam)
    quad = quad or _W_QUAD

    def integrand(u):
        w = 1.0 + 1j * np.asarray(u)
        shift = ((w ** -alpha) - 1.0) / alpha + 1j * np.asarray(u)
        return w**beta * np.exp(lam * shift)

    width = 1.0 / math.sqrt(lam * (1.0 + alpha))
    res = integrate(integrand, 0.0, 1.0, quad, peak=0.0, width=width)
    scaled = res.value.real / math.pi
    if not scaled > 0:
        raise QuadratureError(
            f"W integral is not positive (scaled value {scaled!r}) at alpha={alpha}, beta={beta}, lam={lam}",
            achieved=res.error,
        )
    return (1.0 + 1.0 / alpha) * lam + math.log(scaled)


def W_saddle_leading(alpha: float, beta: float, lam: float) -> float:
    """Log of the leading saddle-point term e^{(1+1/alpha) lam} / sqrt(2 pi (1+alpha) lam).

    ``beta`` is accepted for symmetry with :func:`W_quadrature`; it does not
    enter the leading term.
    """
    _check_positive(alpha=alpha, beta=beta, lam=lam)
    return (1.0 + 1.0 / alpha) * lam - 0.5 * math.log(lam) - 0.5 * math.log(2.0 * math.pi * (1.0 + alpha))


def _check(params, n):
    if params.v not in (1, 2):
        raise UnsupportedError(f"asymptotics are only known for v in {{1, 2}}, got v = {params.v}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")


def w_argument(params: CountParams, n: int) -> float:
    """The W argument as written for each v: kappa_r n^(1/(1+r)), or its eta-weighted form for v = 2."""
    _check(params, n)
    r = params.r
    k = specfun.kappa(r)
    if params.v == 1:
        return k * n ** (1.0 / (1 + r))
    eta = specfun.eta_real(1.0 / r)
    return k * eta * (n / eta) ** (1.0 / (1 + r))


def _theorem_prefactor_log(params, n):
    r = params.r
    k = specfun.kappa(r)
    expo_den = 1.0 + 1.0 / r
    if params.v == 1:
        return (
            1.5 * math.log(k)
            - 0.5 * math.log(2.0 ** (r + 1) * math.pi**r)
            + (1.5 / expo_den) * math.log(1.0 / n)
        )
    eta = specfun.eta_real(1.0 / r)
    return (
        1.25 * math.log(k)
        - 0.25 * math.log(2.0**r * math.pi ** (r + 1))
        + (1.25 / expo_den) * math.log(eta / n)
    )


def s_asym_theorem(params: CountParams, n: int, quad: QuadratureSpec | None = None) -> AsymEstimate:
    """Uniform approximation of s_{r,v}(n) through W, written per v.

    v = 1: kappa_r^{3/2} (2^{r+1} pi^r)^{-1/2} n^{-(3/2)/(1+1/r)} W_{1/r,1/2}(kappa_r n^{1/(1+r)}).
    v = 2: kappa_r^{5/4} (2^r pi^{r+1})^{-1/4} (eta/n)^{(5/4)/(1+1/r)}
    W_{1/r,1/4}(kappa_r eta (n/eta)^{1/(1+r)}), with eta = eta(1/r).
    """
    _check(params, n)
    beta = 0.5 if params.v == 1 else 0.25
    log_w = W_quadrature(1.0 / params.r, beta, w_argument(params, n), quad)
    return AsymEstimate(_theorem_prefactor_log(params, n) + log_w, "theorem-W-quad")


def _generic_parts(params, n):
    sp = specfun.saddle_params(params)
    a = sp.alpha
    lam = sp.kappa ** (1.0 / (1.0 + a)) * n ** (a / (1.0 + a))
    pre = math.log(sp.gamma) + (1.0 + sp.beta) / (1.0 + a) * math.log(sp.kappa / n)
    return sp, lam, pre


def s_asym_generic(params: CountParams, n: int, quad: QuadratureSpec | None = None) -> AsymEstimate:
    """gamma (kappa/n)^{(1+beta)/(1+alpha)} W_{alpha,beta}(kappa^{1/(1+alpha)} n^{alpha/(1+alpha)})."""
    _check(params, n)
    sp, lam, pre = _generic_parts(params, n)
    return AsymEstimate(pre + W_quadrature(sp.alpha, sp.beta, lam, quad), "theorem-W-quad")


def s_asym_leading(params: CountParams, n: int) -> AsymEstimate:
    """Leading-order closed form (for r = v = 1 it is e^{pi sqrt n} / (8 n))."""
    _check(params, n)
    r = params.r
    k = specfun.kappa(r)
    common = -0.5 * math.log(1.0 + 1.0 / r)
    if params.v == 1:
        value = (
            -(r + 2) / 2.0 * math.log(2.0)
            - (r + 1) / 2.0 * math.log(math.pi)
            + common
            + math.log(k)
            - (3 * r + 1) / (2.0 + 2.0 * r) * math.log(n)
            + (1 + r) * k * n ** (1.0 / (1 + r))
        )
    else:
        eta = specfun.eta_real(1.0 / r)
        value = (
            -(r + 2) / 4.0 * math.log(2.0)
            - (r + 3) / 4.0 * math.log(math.pi)
            + common
            + (3.0 * r) / (4.0 * r + 4.0) * math.log(eta)
            + 0.75 * math.log(k)
            - (5 * r + 2) / (4.0 + 4.0 * r) * math.log(n)
            + (1 + r) * k * eta ** (r / (1.0 + r)) * n ** (1.0 / (1 + r))
        )
    return AsymEstimate(value, "corollary-leading")


def s_asym_generic_leading(params: CountParams, n: int) -> AsymEstimate:
    """The generic estimate with W replaced by its leading saddle-point term."""
    _check(params, n)
    sp, lam, pre = _generic_parts(params, n)
    return AsymEstimate(pre + W_saddle_leading(sp.alpha, sp.beta, lam), "corollary-leading")


def relative_error(estimate: AsymEstimate | float, exact: int) -> float:
    """estimate / exact - 1, computed from logarithms so neither side overflows."""
    if exact <= 0:
        raise DomainError("exact value must be positive")
    est_log = estimate.value_log if isinstance(estimate, AsymEstimate) else float(estimate)
    return math.expm1(est_log - math.log(exact))
