import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diophcount import CountParams, ConsistencyError, GuardError, UnsupportedError
from diophcount.oracle import count_bruteforce
from diophcount.series import (
    CoeffTable,
    coeffs,
    coeffs_direct,
    coeffs_prop1_v1,
    coeffs_prop1_v2,
    theta_factor,
)

OVERPARTITIONS = [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]


@pytest.mark.parametrize(
    "r, v, j, upto, expected",
    [
        (1, 1, 1, 3, [(0, 1), (1, 2), (2, 2), (3, 2)]),
        (1, 2, 1, 5, [(0, 1), (1, 2), (4, 2)]),
        (2, 1, 2, 9, [(0, 1), (4, 2), (8, 2)]),
    ],
)
def test_theta_factor(r, v, j, upto, expected):
    assert theta_factor(CountParams(r, v), j, upto) == expected


def test_direct_examples():
    assert coeffs_direct(CountParams(1, 1), 5).coeffs == (1, 2, 4, 8, 14, 24)
    assert coeffs_direct(CountParams(2, 1), 4).coeffs == (1, 2, 2, 2, 4)
    assert coeffs_direct(CountParams(1, 3), 2).coeffs == (1, 2, 2)


def test_closed_product_examples():
    assert coeffs_prop1_v1(1, 5).coeffs == (1, 2, 4, 8, 14, 24)
    assert coeffs_prop1_v1(2, 3).coeffs == (1, 2, 2, 2)
    assert coeffs_prop1_v1(3, 0).coeffs == (1,)
    assert coeffs_prop1_v2(1, 4).coeffs == (1, 2, 2, 6, 8)
    assert coeffs_prop1_v2(2, 1).coeffs == (1, 2)
    assert coeffs_prop1_v2(1, 0).coeffs == (1,)


def test_overpartition_anchor():
    assert list(coeffs_direct(CountParams(1, 1), 10).coeffs) == OVERPARTITIONS


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("v", [1, 2, 3])
def test_direct_matches_oracle(r, v):
    params = CountParams(r, v)
    table = coeffs_direct(params, 40)
    assert list(table.coeffs) == [count_bruteforce(params, n) for n in range(41)]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_closed_products_match_direct(r):
    assert coeffs_prop1_v1(r, 200).coeffs == coeffs_direct(CountParams(r, 1), 200).coeffs
    assert coeffs_prop1_v2(r, 200).coeffs == coeffs_direct(CountParams(r, 2), 200).coeffs


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 60), st.integers(1, 40))
@settings(max_examples=40, deadline=None)
def test_truncation_stability(r, v, n, extra):
    params = CountParams(r, v)
    short = coeffs_direct(params, n).coeffs
    assert coeffs_direct(params, n + extra).coeffs[: n + 1] == short
    if v <= 2:
        assert coeffs(params, n + extra, method="prop1").coeffs[: n + 1] == short


def test_table_invariants_enforced():
    with pytest.raises(ConsistencyError):
        CoeffTable(CountParams(1, 1), 2, (1, 3, 4), "direct-product")
    with pytest.raises(ConsistencyError):
        CoeffTable(CountParams(1, 1), 1, (2, 2), "direct-product")
    with pytest.raises(ConsistencyError):
        CoeffTable(CountParams(1, 1), 1, (1, -2), "direct-product")


def test_guard():
    with pytest.raises(GuardError):
        coeffs_direct(CountParams(1, 1), 500, max_upto=100)
    with pytest.raises(GuardError):
        coeffs_prop1_v1(1, 10**6)


def test_dispatch():
    p = CountParams(2, 2)
    assert coeffs(p, 30, "prop1").method == "prop1-v2"
    assert coeffs(p, 30, "direct").method == "direct-product"
    assert coeffs(CountParams(1, 1), 30).method == "prop1-v1"
    with pytest.raises(UnsupportedError):
        coeffs(CountParams(1, 3), 10, "prop1")


def test_serialization_is_exact():
    table = coeffs(CountParams(1, 1), 400)
    assert CoeffTable.from_json(table.to_json()) == table
    data = json.loads(table.to_json())
    assert all(isinstance(c, str) for c in data["coeffs"])
    assert data["coeffs"][400] == str(table[400])
    rows = table.to_csv().splitlines()
    assert rows[0] == "n,s"
    assert rows[-1] == f"400,{table[400]}"
    assert len(rows) == 402
