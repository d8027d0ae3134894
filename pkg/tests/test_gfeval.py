import cmath
import json
import logging
import math

import numpy as np
import pytest

from diophcount import CountParams, DomainError, GuardError, PrecisionError, UnsupportedError
from diophcount.gfeval import (
    ComplexEval,
    QuadratureSpec,
    asym_residual_scan,
    cauchy_coefficient,
    cauchy_integral,
    log_G,
    log_G_asym,
    minor_arc_margin,
    saddle_radius,
)
from diophcount.series import coeffs

GRID = [0.5, 0.25, 0.125, 0.0625]


def truncated_series(params, z, upto=2000):
    table = coeffs(params, upto)
    return sum(complex(c) * cmath.exp(-n * z) for n, c in enumerate(table.coeffs))


def test_complex_eval_normalises():
    e = ComplexEval(1.0, 3 * math.pi)
    assert e.argument == pytest.approx(math.pi)
    assert ComplexEval.from_log(2 + 7j).argument == pytest.approx(7 - 2 * math.pi)
    assert ComplexEval(0.0, -math.pi).argument == math.pi
    assert ComplexEval(0.5, 1.0).to_complex() == pytest.approx(cmath.exp(0.5 + 1j))


def test_log_G_large_z():
    # three dominant exponentials by hand: 2(e^-10 + e^-20 + (4/3) e^-30)
    hand = 2 * (math.exp(-10) + math.exp(-20) + 4 / 3 * math.exp(-30))
    assert log_G(CountParams(1, 1), 10).log_modulus == pytest.approx(hand, rel=1e-12, abs=0)
    for p in [CountParams(1, 1), CountParams(3, 2)]:
        assert abs(log_G(p, 60).log_modulus) < 1e-25


@pytest.mark.parametrize("r, v", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_log_G_matches_truncated_series_real(r, v):
    p = CountParams(r, v)
    oracle = math.log(truncated_series(p, 0.1).real)
    assert log_G(p, 0.1).log_modulus == pytest.approx(oracle, abs=1e-8)


@pytest.mark.parametrize("z", [0.3 + 0.5j, 0.25 - 2.0j, 0.4 + math.pi * 1j])
def test_log_G_matches_truncated_series_complex(z):
    for p in [CountParams(1, 1), CountParams(1, 2), CountParams(2, 2)]:
        val = log_G(p, z)
        oracle = truncated_series(p, z, upto=600)
        assert val.log_modulus == pytest.approx(math.log(abs(oracle)), abs=1e-9)
        assert abs(cmath.exp(1j * val.argument) - oracle / abs(oracle)) < 1e-9


def test_log_G_errors():
    with pytest.raises(DomainError):
        log_G(CountParams(1, 1), -0.1 + 1j)
    with pytest.raises(PrecisionError):
        log_G(CountParams(1, 1), 0.01, tol=1e-20)
    with pytest.raises(UnsupportedError):
        log_G(CountParams(1, 3), 0.5)


def test_log_G_asym_examples():
    x = 0.37
    v1 = log_G_asym(CountParams(1, 1), x).log_modulus
    assert v1 == pytest.approx(0.5 * math.log(x) + (math.pi / 2) ** 2 / x - math.log(math.sqrt(4 * math.pi)), rel=1e-13)
    v2 = log_G_asym(CountParams(1, 2), x).log_modulus
    assert v2 == pytest.approx(
        0.25 * math.log(x) + math.log(2) * (math.pi / 2) ** 2 / x - 0.25 * math.log(2 * math.pi**2), rel=1e-13
    )
    z = 0.2 + 0.15j
    for p in [CountParams(1, 1), CountParams(3, 2)]:
        a, b = log_G_asym(p, z), log_G_asym(p, z.conjugate())
        assert a.log_modulus == pytest.approx(b.log_modulus, rel=1e-14)
        assert a.argument == pytest.approx(-b.argument, abs=1e-13)


def test_log_G_asym_sector():
    with pytest.raises(DomainError):
        log_G_asym(CountParams(1, 1), 0.1 + 0.2j)
    with pytest.raises(DomainError):
        log_G_asym(CountParams(1, 1), 0)


@pytest.mark.parametrize("r, v", [(1, 2), (2, 1), (2, 2)])
def test_residual_scan_double_precision(r, v):
    rep = asym_residual_scan(CountParams(r, v), GRID, dps=None)
    assert rep.status == "PASS"
    assert rep.slope >= 1
    assert rep.extra["monotone"]


def test_residual_scan_below_double_floor_is_inconclusive():
    # for r = v = 1 the remainder is ~exp(-2 pi^2 / x): under 1e-17 already at x = 1/2
    rep = asym_residual_scan(CountParams(1, 1), GRID, dps=None)
    assert rep.status == "INCONCLUSIVE"
    assert all(rep.extra["floor_limited"])


def test_residual_scan_high_precision():
    rep = asym_residual_scan(CountParams(1, 1), GRID, dps=200)
    assert rep.status == "PASS"
    # the log-residual is -2 pi^2 / x up to lower-order terms
    for x, ld in zip(GRID, rep.statistic):
        assert ld == pytest.approx(-2 * math.pi**2 / x, rel=1e-2)
    assert json.loads(rep.to_json())["status"] == "PASS"
    assert set(json.loads(rep.to_json())) >= {"grid", "residuals", "slope", "status"}


def test_residual_scan_single_point():
    rep = asym_residual_scan(CountParams(2, 2), [0.3], dps=None)
    assert rep.status == "INCONCLUSIVE"
    assert rep.slope is None


def test_residual_scan_default_resolves_floor():
    rep = asym_residual_scan(CountParams(1, 1), GRID)
    assert rep.status == "PASS" and not any(rep.extra["floor_limited"])
    assert rep.extra["dps"] >= 40


def test_residual_scan_grid_validation():
    with pytest.raises(DomainError):
        asym_residual_scan(CountParams(1, 1), [0.1, 0.2])


def test_cauchy_examples():
    exact = coeffs(CountParams(1, 1), 20)[20]
    assert exact == 7336
    assert cauchy_coefficient(CountParams(1, 1), 20) == pytest.approx(exact, rel=5e-3)
    assert cauchy_coefficient(CountParams(1, 2), 10) == pytest.approx(coeffs(CountParams(1, 2), 10)[10], rel=5e-3)
    assert cauchy_coefficient(CountParams(2, 1), 1) == pytest.approx(2, rel=1e-2)


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("v", [1, 2])
def test_cauchy_triangle(r, v):
    p = CountParams(r, v)
    table = coeffs(p, 50)
    for n in (5, 20, 50):
        est = cauchy_coefficient(p, n)
        assert abs(est - table[n]) / table[n] <= 5e-3


def test_cauchy_reality_and_symmetry():
    p = CountParams(1, 2)
    quad = QuadratureSpec()
    half = cauchy_integral(p, 30, quad)
    full = cauchy_integral(p, 30, quad, full_range=True)
    assert abs(full.scaled_integral.imag) < quad.abs_tol
    assert full.value == pytest.approx(half.value, rel=1e-10)


def test_cauchy_tanh_sinh_rule():
    p = CountParams(2, 1)
    est = cauchy_coefficient(p, 40, QuadratureSpec(rule="tanh-sinh"))
    assert est == pytest.approx(coeffs(p, 40)[40], rel=1e-8)


def test_cauchy_radius_and_guard():
    assert saddle_radius(CountParams(1, 1), 100) == pytest.approx(math.pi / 2 / 10, rel=1e-12)
    with pytest.raises(GuardError):
        cauchy_coefficient(CountParams(1, 1), 501)
    with pytest.raises(DomainError):
        cauchy_coefficient(CountParams(1, 1), 0)


@pytest.mark.parametrize("r, v", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_minor_arc_domination(r, v, caplog):
    p = CountParams(r, v)
    x = saddle_radius(p, 50)
    with caplog.at_level(logging.INFO, logger="diophcount.gfeval"):
        c, y = minor_arc_margin(p, x)
    assert c > 0
    assert x <= y <= math.pi
    assert "minor-arc margin" in caplog.text
