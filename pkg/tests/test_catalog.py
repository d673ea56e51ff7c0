import random
from fractions import Fraction

import mpmath
import pytest

from abelkit.data import (
    REGISTRY,
    catalog_frame,
    eval_forward,
    eval_inverse,
    get_function,
    lambert_w0,
    list_functions,
    power_family,
    power_family_q,
    taylor_coefficient,
)
from abelkit.errors import OutOfBasin, OutOfRange, UnknownFunction
from abelkit.series import LogMultiple


@pytest.mark.parametrize("name", list(REGISTRY))
def test_gamma_is_first_coefficient(name):
    fn = get_function(name)
    assert taylor_coefficient(fn, 1) == fn.gamma
    assert fn.gamma < 0


@pytest.mark.parametrize(
    "name, m, expected",
    [
        ("lambert-w", 7, Fraction(-16384, 315)),
        ("lambert-w", 2, Fraction(3, 2)),
        ("xexp-neg", 8, Fraction(1, 40320)),
        ("sin", 2, Fraction(1, 120)),
        ("arcsinh", 2, Fraction(3, 40)),
        ("tanh", 2, Fraction(2, 15)),
        ("tanh", 3, Fraction(-17, 315)),
        ("arctan", 3, Fraction(-1, 7)),
        ("log1p", 2, Fraction(1, 3)),
        ("one-minus-exp-neg", 2, Fraction(1, 6)),
        ("x-over-sqrt1px", 2, Fraction(3, 8)),
        ("logistic", 2, Fraction(0)),
        ("x-over-1px2", 4, Fraction(1)),
    ],
)
def test_taylor_coefficients(name, m, expected):
    assert taylor_coefficient(get_function(name), m) == expected


def test_taylor_coefficient_index():
    with pytest.raises(ValueError):
        taylor_coefficient(get_function("sin"), 0)


def test_kindred_pairs_are_symmetric():
    for fn in REGISTRY.values():
        if fn.kindred:
            assert get_function(fn.kindred).kindred == fn.name


class TestFamilies:
    def test_power_family(self):
        fn = power_family(Fraction(2))
        assert fn.name == "pow-p(2)"
        assert fn.gamma == -2
        assert taylor_coefficient(fn, 2) == 3
        assert get_function("pow-p", p=2) is fn

    def test_power_family_conjecture(self):
        assert power_family(Fraction(1, 2)).delta_conjecture == LogMultiple(Fraction(-1, 2), 2)
        assert power_family(1).delta_conjecture.is_zero

    def test_power_family_rejects_non_positive(self):
        with pytest.raises(ValueError):
            power_family(0)

    def test_power_family_q(self):
        fn = power_family_q(3)
        assert (fn.tau, fn.gamma) == (3, -1)
        assert taylor_coefficient(fn, 2) == 1
        assert fn.delta_conjecture is None
        with pytest.raises(ValueError):
            power_family_q(0)

    def test_family_parameters_required(self):
        with pytest.raises(ValueError):
            get_function("pow-p")
        with pytest.raises(ValueError):
            get_function("pow-q")


def test_unknown_function():
    with pytest.raises(UnknownFunction):
        get_function("cosh")
    with pytest.raises(KeyError):
        get_function("cosh")


def test_listing():
    names = list_functions()
    assert names[:2] == ["logistic", "sin"]
    assert "pow-p" in names and "pow-q" in names
    frame = catalog_frame()
    assert list(frame["name"])[: len(REGISTRY)] == list(REGISTRY)
    assert {"name", "tau", "gamma", "basin", "delta"} <= set(frame.columns)


class TestLambertW:
    def test_omega_constant(self, dps30):
        assert abs(lambert_w0(1) - mpmath.mpf("0.567143290409783872999968662210355549753815787")) < mpmath.mpf(10) ** -28

    def test_defining_equation(self, dps30):
        for x in ("0.001", "0.5", "4", "100"):
            w = lambert_w0(mpmath.mpf(x))
            assert abs(w * mpmath.exp(w) - mpmath.mpf(x)) < mpmath.mpf(10) ** -27 * max(1, mpmath.mpf(x))

    def test_negative_arguments(self, dps30):
        w = lambert_w0(mpmath.mpf("-0.25"))
        assert abs(w * mpmath.exp(w) + mpmath.mpf("0.25")) < mpmath.mpf(10) ** -28
        assert lambert_w0(-mpmath.exp(-1)) == -1

    def test_below_branch_point(self, dps30):
        with pytest.raises(OutOfRange):
            lambert_w0(-1)


class TestEvaluators:
    @pytest.mark.parametrize("name", list(REGISTRY))
    def test_round_trip(self, name, dps30):
        fn = get_function(name)
        x = mpmath.mpf(1) / 2
        assert abs(eval_inverse(fn, eval_forward(fn, x)) - x) < mpmath.mpf(10) ** -25

    @pytest.mark.parametrize("p", [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 2)])
    def test_family_round_trip(self, p, dps30):
        fn = power_family(p)
        x = mpmath.mpf(1) / 3
        assert abs(eval_inverse(fn, eval_forward(fn, x)) - x) < mpmath.mpf(10) ** -25

    def test_forward_at_fixed_point(self):
        assert eval_forward(get_function("sin"), 0) == 0

    def test_outside_basin(self):
        with pytest.raises(OutOfBasin):
            eval_forward(get_function("logistic"), 2)
        with pytest.raises(OutOfBasin):
            eval_forward(get_function("sin"), -1)

    def test_outside_range(self):
        with pytest.raises(OutOfRange):
            eval_inverse(get_function("xexp-neg"), 1)
        with pytest.raises(OutOfRange):
            eval_inverse(get_function("tanh"), 0)

    def test_peak_maps_to_branch_end(self, dps30):
        fn = get_function("x-over-1px2")
        assert eval_inverse(fn, mpmath.mpf(1) / 2) == 1


def sample_points(top, count, seed):
    rng = random.Random(seed)
    return [mpmath.mpf(rng.randint(50, 950)) / 1000 * top for _ in range(count)]


@pytest.mark.parametrize("name", list(REGISTRY))
def test_forward_matches_taylor_coefficients(name):
    fn = get_function(name)
    with mpmath.workdps(320):
        x = mpmath.mpf(10) ** -12
        rest = eval_forward(fn, x) - x
        for m in range(1, 9):
            c = taylor_coefficient(fn, m)
            power = x ** (m * fn.tau + 1)
            ratio = rest / power
            assert abs(ratio - mpmath.mpf(c.numerator) / c.denominator) < mpmath.mpf(10) ** -8 * max(1, abs(c)), m
            rest -= mpmath.mpf(c.numerator) / c.denominator * power


@pytest.mark.parametrize("name", list(REGISTRY))
def test_round_trip_at_random_points(name, dps30):
    fn = get_function(name)
    top = min(fn.basin(), fn.branch(), mpmath.mpf(4))
    for x in sample_points(top, 10, seed=len(name)):
        assert abs(eval_inverse(fn, eval_forward(fn, x)) - x) < mpmath.mpf(10) ** -25 * max(1, x), x


@pytest.mark.parametrize("name", list(REGISTRY))
def test_orbit_decreases(name, dps30):
    fn = get_function(name)
    top = min(fn.basin(), mpmath.mpf(10))
    for x in sample_points(top, 10, seed=len(name) + 1):
        y = eval_forward(fn, x)
        assert 0 < y < x, x
