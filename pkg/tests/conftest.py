import mpmath
import pytest
from hypothesis import strategies as st

from abelkit.series import LaurentSeries, PowerSeries

K_FAST = 16


def small_fractions():
    return st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def power_series(draw, min_valuation=0, max_valuation=3, max_terms=5, max_order=9):
    """Truncated series with a nonzero coefficient at its valuation."""
    valuation = draw(st.integers(min_value=min_valuation, max_value=max_valuation))
    order = draw(st.integers(min_value=valuation, max_value=max(valuation, max_order)))
    lead = draw(small_fractions().filter(lambda c: c != 0))
    coeffs = {valuation: lead}
    if order > valuation:
        for n in draw(st.lists(st.integers(min_value=valuation + 1, max_value=order), max_size=max_terms)):
            coeffs[n] = draw(small_fractions())
    return PowerSeries(coeffs, order)


@st.composite
def abel_derivatives(draw, max_tau=3, max_order=12):
    """``1/lambda``-shaped Laurent series on the grid ``-tau-1 + m tau``."""
    tau = draw(st.integers(min_value=1, max_value=max_tau))
    order = draw(st.integers(min_value=-1, max_value=max_order))
    coeffs = {n: draw(small_fractions()) for n in range(-tau - 1, order + 1, tau)}
    return tau, LaurentSeries(coeffs, order)


@pytest.fixture
def dps30():
    with mpmath.workdps(30):
        yield


def close(a, b, tol):
    return abs(mpmath.mpf(a) - mpmath.mpf(b)) < tol
