import logging
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..data.catalog import BaseFunction, get_function, taylor_coefficient
from ..errors import DegenerateSolve
from ..series import (
    AbelForm,
    LaurentSeries,
    LinearForm,
    PowerSeries,
    as_rational,
    coefficient_at,
    coefficient_of_product,
    integrate_with_log,
    laurent_reciprocal,
    series_compose,
    series_int_pow,
    series_mul,
)

__all__ = [
    "EJResult",
    "abel_series",
    "clear_cache",
    "epsilon",
    "julia_coefficients_direct",
    "julia_residual",
    "julia_series",
    "published_abel_series",
    "solve_linear",
    "taylor_polynomial",
]

logger = logging.getLogger(__name__)

default_cfg = {
    "k_default": 32,
}


@dataclass(frozen=True)
class EJResult:
    fn: str
    K: int
    tau: int
    gamma: Fraction
    julia: PowerSeries
    v: Tuple[Fraction, ...]
    reciprocal: LaurentSeries
    abel: AbelForm

    def coefficient(self, m: int) -> Fraction:
        """``v_m`` with ``v_1 = gamma``."""
        if m == 1:
            return self.gamma
        return self.v[m - 2]


def epsilon(tau: int, j: int, k: int) -> int:
    return tau * (j + k - 1) + 1


def taylor_polynomial(fn: BaseFunction, K: int, order: Optional[int] = None) -> PowerSeries:
    """``phi_K(x) = x + sum_{m<=K} c_m x^(m tau + 1)``; known exactly through ``tau*(K+1)``."""
    tau = fn.tau
    order = tau * (K + 1) if order is None else order
    coeffs = {1: Fraction(1)}
    for m in range(1, K + 1):
        n = m * tau + 1
        if n > order:
            break
        coeffs[n] = taylor_coefficient(fn, m)
    return PowerSeries(coeffs, order)


def solve_linear(c: LinearForm) -> Fraction:
    if not isinstance(c, LinearForm):
        c = LinearForm(c)
    if c.slope == 0:
        raise DegenerateSolve(f"coefficient {c} does not depend on the unknown")
    return -c.constant / c.slope


_memo: Dict[Tuple[BaseFunction, int], EJResult] = {}
_memo_lock = threading.Lock()


def julia_series(fn, K: Optional[int] = None) -> EJResult:
    """Run EJ for ``fn`` with truncation parameter ``K``; results are memoized per ``(fn, K)``."""
    fn = get_function(fn)
    K = default_cfg["k_default"] if K is None else int(K)
    if K < 4:
        raise ValueError(f"K must be at least 4, got {K}")
    key = (fn, K)
    with _memo_lock:
        cached = _memo.get(key)
    if cached is not None:
        return cached
    result = _run_ej(fn, K)
    with _memo_lock:
        _memo[key] = result
    return result


def clear_cache():
    with _memo_lock:
        _memo.clear()


def _run_ej(fn: BaseFunction, K: int) -> EJResult:
    tau, gamma = fn.tau, fn.gamma
    working = tau * (K + 1) + 2

    phi = taylor_polynomial(fn, K)
    psi = taylor_polynomial(fn, K + 1).derivative()
    phi_tau = series_int_pow(phi, tau).truncate(working)

    u = LinearForm.unknown()
    v: List = [u]  # v[i] holds v_{i+1}
    power = series_int_pow(phi, tau + 1).truncate(working)  # phi^eps(-1, k)
    L = power.scale(gamma)
    R = PowerSeries.monomial(tau + 1, gamma, working)

    for k in range(3, K):
        lower, upper, target = epsilon(tau, -1, k), epsilon(tau, 0, k), epsilon(tau, 1, k)
        next_power = series_mul(power, phi_tau, order=working)
        carry = v[k - 3] - u
        L = L + power.scale(carry) + next_power.scale(u)
        R = R + PowerSeries({lower: carry, upper: u}, working)
        residual = coefficient_at(L, target) - coefficient_of_product(psi, R, target)
        value = solve_linear(residual)
        logger.debug(f"{fn.name} K={K} k={k}: [x^{target}] = {residual}, v_{k - 1} = {value}")
        v.append(value)
        power = next_power
    values = tuple(as_rational(c) for c in v[1:])

    coeffs = {tau + 1: gamma}
    for m, c in enumerate(values, start=2):
        coeffs[tau * m + 1] = c
    julia = PowerSeries(coeffs, tau * (K - 1))
    reciprocal = laurent_reciprocal(julia, tau + 1)
    abel = integrate_with_log(reciprocal, tau)
    logger.info(f"EJ {fn.name} K={K}: {len(values)} Julia coefficients, {abel.num_terms} Abel terms")
    return EJResult(fn.name, K, tau, gamma, julia, values, reciprocal, abel)


def julia_coefficients_direct(fn, K: Optional[int] = None) -> List[Fraction]:
    """``v_2 .. v_{K-2}`` from matching coefficients of ``lambda(theta(x)) = theta'(x) lambda(x)``.

    The coefficient of ``x^((m+1) tau + 1)`` is linear in ``v_m`` with pivot
    ``gamma tau (m - 1)`` and free of every ``v_j`` with ``j > m``.
    """
    fn = get_function(fn)
    K = default_cfg["k_default"] if K is None else int(K)
    if K < 4:
        raise ValueError(f"K must be at least 4, got {K}")
    tau, gamma = fn.tau, fn.gamma
    order = tau * (K - 1) + 1
    phi = taylor_polynomial(fn, K, order)
    psi = taylor_polynomial(fn, K + 1, order + 1).derivative()
    phi_tau = series_int_pow(phi, tau)

    powers = {}
    current = series_int_pow(phi, tau + 1)
    for m in range(1, K - 1):
        powers[m] = current
        current = series_mul(current, phi_tau, order=order)

    def contribution(j: int, n: int) -> Fraction:
        shift = n - (tau * j + 1)
        return coefficient_at(powers[j], n) - (coefficient_at(psi, shift) if shift >= 0 else 0)

    w = {1: gamma}
    for m in range(2, K - 1):
        n = (m + 1) * tau + 1
        known = sum((w[j] * contribution(j, n) for j in range(1, m)), Fraction(0))
        pivot = contribution(m, n)
        if pivot == 0:
            raise DegenerateSolve(f"zero pivot at x^{n}")
        w[m] = -known / pivot
    return [w[m] for m in range(2, K - 1)]


def julia_residual(fn, K: Optional[int] = None) -> PowerSeries:
    """``lambda o phi - psi * lambda`` through ``x^(tau (K-1) + 1)``.

    The first unknown coefficient of lambda cancels at that exponent, so the
    series is padded to it with a zero.
    """
    fn = get_function(fn)
    result = julia_series(fn, K)
    order = result.tau * (result.K - 1) + 1
    julia = PowerSeries(result.julia.coeffs, order)
    phi = taylor_polynomial(fn, result.K, order)
    psi = taylor_polynomial(fn, result.K + 1, order + 1).derivative()
    left = series_compose(julia, phi)
    right = series_mul(psi, julia, order=order)
    return (left - right).truncate(order)


def abel_series(fn, K: Optional[int] = None) -> AbelForm:
    """Abel expansion with the internal convention ``G(theta(x)) = G(x) + 1``."""
    return julia_series(fn, K).abel


def published_abel_series(fn, K: Optional[int] = None) -> AbelForm:
    fn = get_function(fn)
    abel = abel_series(fn, K)
    return abel if fn.presentation_sign > 0 else -abel
