"""Counting solutions of n = 1^r |k_1|^v + 2^r |k_2|^v + 3^r |k_3|^v + ...

Exact values come from power-series products (:mod:`.series`) and are
cross-checked against brute force (:mod:`.oracle`) and numerical Cauchy
integrals (:mod:`.gfeval`); large-n behaviour is in :mod:`.asympt`, and the
minor-arc evidence scans in :mod:`.expsum`.
"""
from .errors import (
    ConsistencyError,
    DiophCountError,
    DomainError,
    GuardError,
    PrecisionError,
    QuadratureError,
    UnsupportedError,
)
from .oracle import CountParams, SolutionVector, count_bruteforce, enumerate_solutions
from .series import CoeffTable, coeffs, coeffs_direct, coeffs_prop1_v1, coeffs_prop1_v2
from .specfun import SaddleParams, eta_real, gamma_real, kappa, saddle_params, zeta_real

__version__ = "0.1.0"
