from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dict_add, dict_mul, polys
from laminations.errors import DivisionByZero, PrecisionExhausted, ZeroValuation
from laminations.laurent import (LaurentSeries as LS, PositiveWitness, ls_add, ls_div, ls_is_positive,
                                 ls_mul, ls_val, neg_val, precision, retry_with_precision, t)


def test_disjoint_sum_layout():
    s = ls_add(LS.monomial(2, -1), LS.monomial(3, 2))
    assert s.lo == -1
    assert list(s.coeffs) == [2, 0, 0, 3]


def test_cancellation_gives_exact_zero():
    z = t + (-t)
    assert z.is_zero and z.is_exact


def test_simple_sums_and_products():
    assert (1 + t) + (1 - t) == 2
    assert t ** -2 * t ** 3 == t
    q = LS.monomial(3, -1) / LS.monomial(3, -1)
    assert q == 1


def test_geometric_series_round_trip():
    q = 1 / (1 - t)
    assert q.trunc == 64
    assert all(q.coefficient(k) == 1 for k in range(64))
    # multiplying back gives 1 up to the propagated truncation
    assert (q * (1 - t)).agrees(1)
    assert not (q * (1 - t)).agrees(2)


def test_valuation_examples():
    assert ls_val(3 * t ** -2 + t ** -1) == -2
    assert ls_val(5) == 0
    with pytest.raises(ZeroValuation):
        ls_val(LS.zero())


def test_unknown_zero_has_no_valuation():
    with pytest.raises(PrecisionExhausted):
        LS.zero(10).valuation()


def test_positivity_examples():
    assert ls_is_positive(3 * t ** -2 + t ** -1)
    assert not ls_is_positive(-t + 7 * t ** 2)
    assert ls_is_positive(Fraction(1, 2) * t ** 5)
    with pytest.raises(ZeroValuation):
        ls_is_positive(LS.zero())


def test_division_errors():
    with pytest.raises(DivisionByZero):
        t / LS.zero()
    with pytest.raises(PrecisionExhausted):
        t / LS.zero(5)


def test_exact_polynomial_division_stays_exact():
    a = (1 + t) * (2 - 3 * t + t ** 2)
    q = a / (1 + t)
    assert q.is_exact and q == 2 - 3 * t + t ** 2


def test_precision_context_controls_truncation():
    with precision(8):
        q = 1 / (1 + t)
    assert q.relative_precision() == 8
    assert (1 / (1 + t)).relative_precision() == 64


def test_retry_doubles_until_success():
    seen = []

    def fn():
        from laminations.laurent import get_precision
        seen.append(get_precision())
        if get_precision() < 256:
            raise PrecisionExhausted("need more")
        return "ok"

    assert retry_with_precision(fn, start=64) == "ok"
    assert seen == [64, 128, 256]


def test_retry_gives_up_at_limit():
    def fn():
        raise PrecisionExhausted("never enough")

    with pytest.raises(PrecisionExhausted):
        retry_with_precision(fn, start=512, limit=1024)


def test_positive_witness_rejects_negative():
    PositiveWitness(t + 1)
    with pytest.raises(ValueError):
        PositiveWitness(-t)


def test_str_shows_truncation():
    assert str(1 / (1 - t)).endswith("O(t^64)")
    assert str(2 * t ** -1 + 3 * t ** 2) == "2*t^-1 + 3*t^2"


@given(polys(), polys())
def test_product_matches_schoolbook(a, b):
    (da, sa), (db, sb) = a, b
    assert (sa * sb).terms() == dict_mul(da, db)


@given(polys(), polys())
def test_sum_matches_termwise(a, b):
    (da, sa), (db, sb) = a, b
    assert (sa + sb).terms() == dict_add(da, db)


@given(polys(), polys())
def test_division_round_trip(a, b):
    (_, sa), (_, sb) = a, b
    assert ls_mul(ls_div(sa, sb), sb).agrees(sa)


@given(polys(positive=True), polys(positive=True))
def test_minus_val_is_a_semifield_map(a, b):
    (_, x), (_, y) = a, b
    assert neg_val(x * y) == neg_val(x) + neg_val(y)
    assert neg_val(x / y) == neg_val(x) - neg_val(y)
    assert neg_val(x + y) == max(neg_val(x), neg_val(y))
    assert (x + y).is_positive() and (x * y).is_positive() and (x / y).is_positive()


@given(polys(), st.integers(-5, 5))
def test_power_is_repeated_product(a, k):
    _, x = a
    p = x ** k
    if k >= 0:
        ref = LS.one()
        for _ in range(k):
            ref = ref * x
        assert p == ref
    else:
        assert (p * x ** (-k)).agrees(1)


def test_evaluate_with_floats():
    assert (2 * t ** -1 + 3).evaluate(0.5) == pytest.approx(7.0)
