import dataclasses
from fractions import Fraction

import pytest
from conftest import K_FAST

from abelkit.data import REGISTRY, get_function, power_family, power_family_q, reference
from abelkit.errors import DegenerateSolve
from abelkit.models.ej import (
    abel_series,
    epsilon,
    julia_coefficients_direct,
    julia_residual,
    julia_series,
    published_abel_series,
    solve_linear,
    taylor_polynomial,
)
from abelkit.series import LinearForm, PowerSeries
from abelkit.utils.verify import series_rows


def test_epsilon():
    assert epsilon(1, -1, 3) == 2
    assert epsilon(1, 1, 3) == 4
    assert epsilon(2, 0, 5) == 9


def test_taylor_polynomial():
    phi = taylor_polynomial(get_function("sin"), 2)
    assert phi == PowerSeries({1: 1, 3: Fraction(-1, 6), 5: Fraction(1, 120)}, 6)


def test_solve_linear():
    assert solve_linear(LinearForm(Fraction(3), Fraction(2))) == Fraction(-3, 2)
    with pytest.raises(DegenerateSolve):
        solve_linear(LinearForm(Fraction(1)))


def test_truncation_parameter():
    with pytest.raises(ValueError):
        julia_series("sin", 3)


def test_memoized():
    assert julia_series("xexp-neg", K_FAST) is julia_series("xexp-neg", K_FAST)


def test_first_coefficients():
    result = julia_series("xexp-neg", K_FAST)
    assert result.coefficient(1) == -1
    assert result.coefficient(2) == Fraction(-1, 2)
    assert result.coefficient(3) == Fraction(-5, 12)
    assert len(result.v) == K_FAST - 3


def test_orders():
    K = K_FAST
    result = julia_series("sin", K)
    assert result.julia.order == 2 * (K - 1)
    assert result.reciprocal.order == 2 * (K - 3) - 2
    assert result.abel.num_terms <= K - 4


@pytest.mark.parametrize("name", list(reference.LAMBDA))
def test_julia_tables(name):
    julia = julia_series(name).julia
    for exponent, expected in reference.LAMBDA[name].items():
        assert julia.coefficient_at(exponent) == expected, f"x^{exponent}"


@pytest.mark.parametrize("name", list(reference.RECIPROCAL))
def test_reciprocal_tables(name):
    reciprocal = julia_series(name).reciprocal
    for exponent, expected in reference.RECIPROCAL[name].items():
        assert reciprocal.coefficient_at(exponent) == expected, f"x^{exponent}"


@pytest.mark.parametrize("name", list(reference.ABEL))
def test_abel_tables(name):
    abel = abel_series(name)
    table = reference.ABEL[name]
    assert abel.pole == table.pole
    assert abel.log == table.log
    for m, expected in enumerate(table.terms, start=1):
        assert abel.coefficient(m) == expected, f"term {m}"


def test_sin_expansion_text():
    assert "79/1050 x^2" in abel_series("sin", 10).to_text()


@pytest.mark.parametrize("name", list(REGISTRY))
def test_julia_identity(name):
    residual = julia_residual(name, K_FAST)
    assert residual.order == get_function(name).tau * (K_FAST - 1) + 1
    assert all(c == 0 for _, c in residual.items())


@pytest.mark.parametrize("name", list(REGISTRY))
def test_direct_solve_agrees(name):
    assert julia_coefficients_direct(name, K_FAST) == list(julia_series(name, K_FAST).v)


@pytest.mark.slow
@pytest.mark.parametrize("name", list(REGISTRY))
def test_julia_identity_full(name):
    residual = julia_residual(name, 32)
    assert all(c == 0 for _, c in residual.items())
    assert julia_coefficients_direct(name, 32) == list(julia_series(name, 32).v)


@pytest.mark.parametrize("name", list(REGISTRY))
def test_pole_coefficient(name):
    fn = get_function(name)
    assert abel_series(fn, K_FAST).pole == -1 / (fn.gamma * fn.tau)


@pytest.mark.parametrize("name", list(REGISTRY))
def test_log_coefficient_closed_form(name):
    fn = get_function(name)
    c2 = fn.coefficient(2)
    assert abel_series(fn, K_FAST).log == Fraction(fn.tau + 1, 2) - c2 / fn.gamma**2


def test_mirror_pair():
    w = julia_series("lambert-w", K_FAST).julia
    xexp = julia_series("xexp-neg", K_FAST).julia
    assert w.order == xexp.order
    for n in range(w.order + 1):
        assert w.coefficient_at(n) == (-1) ** n * xexp.coefficient_at(n)


def test_published_sign():
    abel = abel_series("lambert-w", K_FAST)
    published = published_abel_series("lambert-w", K_FAST)
    assert published.pole == -abel.pole
    assert published.coefficient(2) == -abel.coefficient(2)
    assert published_abel_series("sin", K_FAST) is abel_series("sin", K_FAST)


def test_moebius_map_is_exact():
    result = julia_series(power_family(1), K_FAST)
    assert all(v == 0 for v in result.v)
    assert result.abel.pole == 1
    assert result.abel.log == 0
    assert all(t == 0 for _, t in result.abel.terms)


def test_higher_tau_family():
    fn = power_family_q(3)
    assert julia_series(fn, K_FAST).coefficient(1) == -1
    assert all(c == 0 for _, c in julia_residual(fn, K_FAST).items())


def test_verify_rows_pass():
    rows = series_rows(get_function("xexp-neg"), K=20)
    assert [r["name"] for r in rows] == [
        "lambda[xexp-neg]",
        "g'[xexp-neg]",
        "g[xexp-neg]",
        "julia-identity[xexp-neg]",
        "oracle[xexp-neg]",
    ]
    assert all(r["status"] == "PASS" for r in rows)


def test_tampered_coefficient_fails():
    fn = get_function("xexp-neg")

    def tampered(m):
        return fn.coefficient(m) + (1 if m == 3 else 0)

    rows = {r["name"]: r for r in series_rows(dataclasses.replace(fn, coefficient=tampered), K=20)}
    assert rows["lambda[xexp-neg]"]["status"] == "FAIL"
    assert rows["g[xexp-neg]"]["status"] == "FAIL"
    assert rows["julia-identity[xexp-neg]"]["status"] == "PASS"


@pytest.mark.parametrize("name", list(REGISTRY))
def test_coefficients_stable_in_K(name):
    short, long = julia_series(name, K_FAST).v, julia_series(name, K_FAST + 4).v
    assert len(long) == len(short) + 4
    assert list(long[: len(short)]) == list(short)
