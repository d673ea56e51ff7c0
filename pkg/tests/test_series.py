from fractions import Fraction

import mpmath
import pytest
from conftest import abel_derivatives, power_series
from hypothesis import given, settings

from abelkit.errors import (
    BeyondTruncation,
    BothSymbolic,
    GridMismatch,
    NonzeroConstantTerm,
    ZeroLeadingCoefficient,
)
from abelkit.series import (
    AbelForm,
    LaurentSeries,
    LinearForm,
    LogMultiple,
    PowerSeries,
    as_rational,
    coefficient_at,
    coefficient_of_product,
    integrate_with_log,
    laurent_reciprocal,
    series_add,
    series_compose,
    series_int_pow,
    series_mul,
)


def common(a, b):
    order = min(a.order, b.order)
    return a.truncate(order), b.truncate(order)


@given(power_series(), power_series())
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(power_series(), power_series())
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(power_series(), power_series(), power_series())
@settings(max_examples=50)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(power_series(), power_series(), power_series())
@settings(max_examples=50)
def test_multiplication_distributes(a, b, c):
    left, right = common(a * (b + c), a * b + a * c)
    assert left == right


@given(power_series(), power_series())
def test_product_order(a, b):
    assert (a * b).order == min(a.order + b.valuation, b.order + a.valuation)


@given(power_series(), power_series())
def test_coefficient_of_product_matches_product(a, b):
    product = a * b
    for n in range(product.order + 1):
        assert coefficient_of_product(a, b, n) == product.coefficient_at(n)


def test_truncation_is_tracked():
    a = PowerSeries({1: 1, 2: Fraction(-1, 2)}, 3)
    assert a.order == 3
    with pytest.raises(BeyondTruncation):
        a.coefficient_at(4)
    assert a.coefficient_at(3) == 0


def test_add_takes_smaller_order():
    a = PowerSeries({1: 1, 2: -1}, 5)
    b = PowerSeries({2: 1, 3: 3}, 3)
    total = series_add(a, b)
    assert total == PowerSeries({1: 1, 3: 3}, 3)
    assert coefficient_at(total, 2) == 0
    with pytest.raises(BeyondTruncation):
        coefficient_at(total, 4)


def test_mul_with_explicit_order():
    a = PowerSeries({1: 1, 2: 1}, 10)
    assert series_mul(a, a, order=3) == PowerSeries({2: 1, 3: 2}, 3)


def test_compose():
    a = PowerSeries({1: 1, 2: 1}, 5)
    assert series_compose(a, a) == PowerSeries({1: 1, 2: 2, 3: 2, 4: 1}, 5)
    assert a(a) == series_compose(a, a)


def test_compose_order_is_min_of_orders():
    outer = PowerSeries({1: 1, 3: 1}, 9)
    inner = PowerSeries({1: 1, 2: Fraction(1, 2)}, 4)
    assert series_compose(outer, inner).order == 4


@given(power_series(min_valuation=1, max_valuation=2), power_series(min_valuation=1, max_valuation=2), power_series(min_valuation=1, max_valuation=2))
@settings(max_examples=40)
def test_compose_associates(a, b, c):
    assert series_compose(series_compose(a, b), c) == series_compose(a, series_compose(b, c))


def test_compose_rejects_constant_term():
    with pytest.raises(NonzeroConstantTerm):
        series_compose(PowerSeries({1: 1}, 4), PowerSeries({0: 1, 1: 1}, 4))


def test_int_pow():
    a = PowerSeries({1: 1, 2: 1}, 6)
    assert series_int_pow(a, 2) == a * a
    assert series_int_pow(a, 0) == PowerSeries({0: 1}, 6)
    with pytest.raises(ValueError):
        series_int_pow(a, -1)


def test_derivative_and_shift():
    a = PowerSeries({1: 1, 3: Fraction(-1, 6)}, 4)
    assert a.derivative() == PowerSeries({0: 1, 2: Fraction(-1, 2)}, 3)
    assert a.shift(2) == PowerSeries({3: 1, 5: Fraction(-1, 6)}, 6)


def test_negative_exponents_need_laurent():
    with pytest.raises(ValueError):
        PowerSeries({-1: 1}, 3)
    assert isinstance(PowerSeries({1: 1}, 3).shift(-2), LaurentSeries)


def test_to_text():
    a = PowerSeries({1: 1, 2: Fraction(-1, 2)}, 3)
    assert a.to_text() == "x - 1/2 x^2 + O(x^4)"
    assert PowerSeries({}, 2).to_text(show_order=False) == "0"


def test_csv_rows_round_trip():
    a = PowerSeries({2: -1, 3: Fraction(-1, 2), 4: Fraction(-5, 12)}, 6)
    assert PowerSeries.from_rows(a.to_rows(), a.order) == a


class TestLinearForm:
    def test_arithmetic(self):
        u = LinearForm.unknown()
        c = (u * 3 + Fraction(1, 2)) - u
        assert c == LinearForm(Fraction(1, 2), 2)
        assert c.substitute(Fraction(1, 4)) == 1

    def test_product_of_unknowns(self):
        u = LinearForm.unknown()
        with pytest.raises(BothSymbolic):
            u * u

    def test_as_rational(self):
        assert as_rational(LinearForm(Fraction(2, 3))) == Fraction(2, 3)
        with pytest.raises(ValueError):
            as_rational(LinearForm.unknown())

    def test_symbolic_series_product(self):
        u = LinearForm.unknown()
        s = PowerSeries({1: u}, 4)
        with pytest.raises(BothSymbolic):
            s * s
        assert (s * PowerSeries({1: 2}, 4)).coefficient_at(2) == u * 2


class TestReciprocal:
    def test_geometric(self):
        a = PowerSeries({2: -1, 3: -1}, 6)
        r = laurent_reciprocal(a)
        assert r.order == 2
        assert [r.coefficient_at(n) for n in range(-2, 3)] == [-1, 1, -1, 1, -1]

    @given(power_series(max_valuation=3, max_order=10))
    def test_product_is_one(self, a):
        r = laurent_reciprocal(a)
        product = a * r
        assert product.truncate(product.order) == PowerSeries({0: 1}, product.order)

    def test_zero_series(self):
        with pytest.raises(ZeroLeadingCoefficient):
            laurent_reciprocal(PowerSeries({}, 3))

    def test_declared_valuation_must_be_nonzero(self):
        with pytest.raises(ZeroLeadingCoefficient):
            laurent_reciprocal(PowerSeries({3: 1}, 6), valuation=2)


class TestAbelForm:
    def test_integrate_with_log(self):
        d = LaurentSeries({-2: -1, -1: Fraction(1, 2), 0: Fraction(1, 6), 1: Fraction(1, 8)}, 1)
        g = integrate_with_log(d, 1)
        assert g.pole == 1
        assert g.log == Fraction(1, 2)
        assert g.coefficient(1) == Fraction(1, 6)
        assert g.coefficient(2) == Fraction(1, 16)

    @given(abel_derivatives())
    def test_derivative_inverts_integration(self, case):
        tau, d = case
        derivative = integrate_with_log(d, tau).formal_derivative()
        assert derivative.order <= d.order
        assert derivative == d.truncate(derivative.order)

    def test_formal_derivative_terms(self):
        g = AbelForm(2, Fraction(3), Fraction(6, 5), PowerSeries({2: Fraction(79, 1050)}, 3))
        assert g.formal_derivative() == LaurentSeries({-3: -6, -1: Fraction(6, 5), 1: Fraction(79, 525)}, 2)

    def test_grid_mismatch(self):
        with pytest.raises(GridMismatch):
            integrate_with_log(LaurentSeries({-3: -1, 0: 1}, 2), 2)

    def test_evaluate_and_derivative(self, dps30):
        g = AbelForm(1, Fraction(1), Fraction(1, 2), PowerSeries({1: Fraction(1, 6)}, 1))
        x = mpmath.mpf(1) / 4
        assert abs(g.evaluate(x) - (4 + mpmath.log(x) / 2 + x / 6)) < mpmath.mpf(10) ** -28
        assert abs(g.derivative(x) - (-16 + 2 + mpmath.mpf(1) / 6)) < mpmath.mpf(10) ** -28

    def test_negation(self):
        g = AbelForm(1, Fraction(1), Fraction(1, 2), PowerSeries({1: Fraction(1, 6)}, 2))
        h = -g
        assert (h.pole, h.log, h.coefficient(1)) == (-1, Fraction(-1, 2), Fraction(-1, 6))

    def test_to_text(self):
        g = AbelForm(2, Fraction(3), Fraction(6, 5), PowerSeries({2: Fraction(79, 1050)}, 4))
        assert g.to_text().startswith("3/x^2 + 6/5 ln(x) + 79/1050 x^2")


class TestLogMultiple:
    def test_canonical_form(self):
        assert LogMultiple(Fraction(1, 3), Fraction(1, 2)) == LogMultiple(Fraction(-1, 3), 2)
        assert LogMultiple(5, 1) == LogMultiple(0)
        assert LogMultiple(0, 7).argument == 1

    def test_str(self):
        assert str(LogMultiple(Fraction(3, 5), 3)) == "(3/5)*ln(3)"
        assert str(LogMultiple(0)) == "0"

    def test_evaluate(self, dps30):
        assert abs(LogMultiple(Fraction(-1, 4), 2).evaluate(30) + mpmath.log(2) / 4) < mpmath.mpf(10) ** -28

    def test_non_positive_argument(self):
        with pytest.raises(ValueError):
            LogMultiple(1, 0)
