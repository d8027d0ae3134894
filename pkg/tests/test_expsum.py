import cmath
import json
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from diophcount import CountParams, DomainError
from diophcount.expsum import ratio_lowerbound_scan, weyl_bound_scan, weyl_sum, weyl_y_grid


def weyl_mp(r, y, L):
    # oracle: exact rational phase reduced mod 1, then a 30-digit exponential
    y = Fraction(y)
    with mpmath.workdps(30):
        total = mpmath.mpc(0)
        for n in range(math.floor(L) + 1, math.floor(2 * L) + 1):
            f = (n**r * y) % 1
            total += mpmath.expjpi(2 * mpmath.mpf(f.numerator) / f.denominator)
        return complex(total)


def test_trivial_examples():
    assert weyl_sum(1, 0.0, 10) == pytest.approx(10)
    assert abs(weyl_sum(1, 0.5, 10)) < 1e-12
    assert abs(weyl_sum(2, 0.3, 1000)) < 1000


@pytest.mark.parametrize("r, y, L", [
    (2, 0.3, 1000), (3, 0.3, 500), (2, Fraction(1, 7), 400), (4, 0.123456789, 300),
    (2, Fraction(1, 3) + Fraction(1, 10**12), 200), (1, 1 / 1024, 64), (3, Fraction(3, 2**70), 50),
])
def test_weyl_matches_oracle(r, y, L):
    assert weyl_sum(r, y, L) == pytest.approx(weyl_mp(r, y, L), abs=1e-9)


def test_quadratic_gauss_sum_vanishes():
    # modulus 10 = 2 mod 4: every full period of e(3 n^2 / 10) cancels
    assert abs(weyl_sum(2, Fraction(3, 10), 1000)) < 1e-9


dyadic = st.integers(0, 2**30).map(lambda k: Fraction(k, 2**30))
rational = st.builds(Fraction, st.integers(0, 1000), st.integers(1, 1000))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.one_of(dyadic, rational), st.integers(1, 300))
def test_weyl_properties(r, y, L):
    s = weyl_sum(r, y, L)
    assert abs(s) <= L + 1e-9
    assert weyl_sum(r, -y, L) == pytest.approx(s.conjugate(), abs=1e-9)
    assert weyl_sum(r, y + 1, L) == pytest.approx(s, abs=1e-9)


def test_weyl_domain():
    with pytest.raises(DomainError):
        weyl_sum(0, 0.1, 10)
    with pytest.raises(DomainError):
        weyl_sum(2, 0.1, 0.5)


@pytest.mark.parametrize("r, L", [(2, 100), (3, 50), (2, 10**4)])
def test_grid_inside_interval(r, L):
    ys = weyl_y_grid(r, L)
    lo = float(L) ** -r
    assert all(lo < float(y) <= 0.5 for y in ys)
    assert Fraction(1, 2) in ys and Fraction(1, 3) in ys
    assert [float(y) for y in ys] == sorted(float(y) for y in ys)


def test_bound_scan_examples():
    rep = weyl_bound_scan(2, 10**4)
    assert rep.passed
    assert rep.extra["empirical_delta"] == pytest.approx(1 - 1 / math.sqrt(2), abs=1e-3)
    assert rep.extra["argmax_y"] == "1/4"
    rep3 = weyl_bound_scan(3, 10**3)
    assert rep3.passed and rep3.extra["empirical_delta"] > 0.05


def test_bound_scan_can_fail():
    rep = weyl_bound_scan(2, 100, y_samples=20, delta=0.9)
    assert rep.status == "FAIL" and rep.worst > 0.1
    with pytest.raises(DomainError):
        weyl_bound_scan(2, 1)


@pytest.mark.parametrize("r, v", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_ratio_scan(r, v):
    rep = ratio_lowerbound_scan(CountParams(r, v), [0.2, 0.1, 0.05, 0.02])
    assert rep.passed
    assert all(c >= 0.1 for c in rep.statistic)
    assert len(rep.extra["argmin_y"]) == 4


def test_ratio_scan_validation():
    with pytest.raises(DomainError):
        ratio_lowerbound_scan(CountParams(1, 1), [0.1, 0.2])
    with pytest.raises(DomainError):
        ratio_lowerbound_scan(CountParams(1, 1), [])


def test_exports():
    rep = weyl_bound_scan(2, 100, y_samples=20)
    d = json.loads(rep.to_json())
    assert d["status"] == rep.status and d["empirical_delta"] == rep.extra["empirical_delta"]
    lines = rep.to_csv().strip().splitlines()
    assert lines[0] == "point,statistic" and len(lines) == len(rep.grid) + 1
