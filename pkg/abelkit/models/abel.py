import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from ..data.catalog import BaseFunction, eval_inverse, get_function
from ..errors import OutOfBasin, OutOfRange, PrecisionUnreachable, ZeroArgument
from ..series import AbelForm
from ..utils.formatting import to_mpf
from ..utils.roots import newton_bisect
from .ej import abel_series

__all__ = [
    "EvalRequest",
    "EvalResult",
    "abel_inverse",
    "abel_value",
    "f67",
    "fractional_iterate",
    "half_iterate",
    "orbit",
    "series_radius",
    "xexp_half",
    "xplusinv_half",
]

logger = logging.getLogger(__name__)

default_cfg = {
    "k_start": 24,
    "k_step": 16,
    "k_max": 96,
    "max_iterations": 10**6,
    "guard_digits": 5,
    # covers log10(max_iterations) digits lost in G(x_n) - n plus headroom
    "extra_dps": 30,
}


@dataclass(frozen=True)
class EvalRequest:
    fn: BaseFunction
    x: object
    digits: int = 50
    max_iterations: int = default_cfg["max_iterations"]

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError(f"digits must be at least 1, got {self.digits}")


@dataclass(frozen=True)
class EvalResult:
    value: mpmath.mpf
    n_used: int
    K_used: int
    error_estimate: mpmath.mpf
    digits: int


def _config(cfg: Optional[dict]) -> dict:
    return {**default_cfg, **(cfg or {})}


def _schedule(cfg: dict):
    K = cfg["k_start"]
    while K <= cfg["k_max"]:
        yield K
        K += cfg["k_step"]


def series_radius(abel: AbelForm, tol):
    """Largest ``x`` at which the last two nonzero retained terms are both below ``tol``."""
    tail = [(m, t) for m, t in abel.terms if t][-2:]
    if not tail:
        return mpmath.inf
    radius = mpmath.inf
    for m, t in tail:
        bound = (tol / abs(to_mpf(t))) ** (mpmath.mpf(1) / (m * abel.tau))
        radius = min(radius, bound)
    return radius


def _orbit_length_estimate(fn: BaseFunction, x_star):
    """Steps needed to fall from O(1) to ``x_star``, from ``x_n ~ (-gamma tau n)^(-1/tau)``."""
    return 1 / (to_mpf(-fn.gamma * fn.tau) * x_star**fn.tau)


def orbit(fn, x, n: int, prec: Optional[int] = None):
    """``x_n``, the ``n``-fold image of ``x`` under ``fn`` (``prec`` in bits)."""
    fn = get_function(fn)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    with mpmath.workprec(prec or mpmath.mp.prec):
        x = to_mpf(x)
        if not fn.in_basin(x):
            raise OutOfBasin(f"{fn.name}: {mpmath.nstr(x, 15)} is outside the basin")
        for _ in range(n):
            x = fn.forward(x)
        return +x


def _walk(fn: BaseFunction, x, x_star, max_iterations: int):
    n = 0
    while x > x_star:
        if n >= max_iterations:
            return None, None
        x = fn.forward(x)
        n += 1
    return n, x


def abel_value(fn, x, digits: int = 50, cfg: Optional[dict] = None) -> EvalResult:
    """``G(x) = lim [G_K(x_n) - n]`` in the EJ normalization, ``G(theta(x)) = G(x) + 1``."""
    fn = get_function(fn)
    cfg = _config(cfg)
    request = EvalRequest(fn, x, digits, cfg["max_iterations"])
    with mpmath.workdps(digits + cfg["extra_dps"]):
        x = to_mpf(request.x)
        if not fn.in_basin(x):
            raise OutOfBasin(f"{fn.name}: {mpmath.nstr(x, 15)} is outside the basin (0, {mpmath.nstr(fn.basin(), 15)})")
        tol = mpmath.mpf(10) ** (-(digits + cfg["guard_digits"]))
        for K in _schedule(cfg):
            abel = abel_series(fn, K)
            x_star = series_radius(abel, tol)
            if x_star != mpmath.inf and _orbit_length_estimate(fn, x_star) > request.max_iterations:
                logger.debug(f"{fn.name} K={K}: orbit would need more than {request.max_iterations} steps")
                continue
            n, xn = _walk(fn, x, x_star, request.max_iterations)
            if n is None:
                continue
            value = abel.evaluate(xn) - n
            error = mpmath.fsum(abel.tail(xn))
            logger.debug(f"{fn.name}({mpmath.nstr(x, 10)}): K={K}, n={n}, error<={mpmath.nstr(error, 3)}")
            return EvalResult(+value, n, K, error, digits)
    raise PrecisionUnreachable(
        f"{fn.name}: {digits} digits out of reach with K<={cfg['k_max']} and {cfg['max_iterations']} iterations"
    )


def abel_inverse(fn, y, digits: int = 50, cfg: Optional[dict] = None):
    """``z`` on the principal branch with ``G(z) = y``.

    ``y + m`` is moved into the zone where the truncated series is trusted,
    solved there, and walked back out with ``m`` inverse steps.
    """
    fn = get_function(fn)
    cfg = _config(cfg)
    with mpmath.workdps(digits + cfg["extra_dps"]):
        y = to_mpf(y)
        tol = mpmath.mpf(10) ** (-(digits + cfg["guard_digits"]))
        for K in _schedule(cfg):
            abel = abel_series(fn, K)
            top = min(series_radius(abel, tol), fn.branch(), fn.basin() / 2)
            if top == mpmath.inf:
                top = mpmath.mpf(1)
            floor_value = abel.evaluate(top)
            m = max(0, int(mpmath.ceil(floor_value - y)))
            if m > cfg["max_iterations"]:
                logger.debug(f"{fn.name} K={K}: {m} inverse steps exceed the iteration cap")
                continue
            target = y + m
            w = _solve_series(abel, target, top)
            for _ in range(m):
                w = eval_inverse(fn, w)
            return +w
    raise PrecisionUnreachable(f"{fn.name}: cannot invert at {digits} digits")


def _solve_series(abel: AbelForm, target, top):
    # the pole term dominates near 0, so G_K decreases from +oo on (0, top]
    lo = top
    for _ in range(10000):
        if abel.evaluate(lo) >= target:
            break
        lo /= 2
    else:
        raise OutOfRange(f"series value {mpmath.nstr(target, 10)} not reached")
    if lo == top:
        return top
    return newton_bisect(lambda t: abel.evaluate(t) - target, abel.derivative, lo, top)


def fractional_iterate(fn, t, x, digits: int = 50, cfg: Optional[dict] = None):
    """``theta^[t](x) = G^-1(G(x) + t)``; ``t = 1`` is ``theta``, ``t = 1/2`` the half-iterate."""
    fn = get_function(fn)
    t = Fraction(t) if not isinstance(t, Fraction) else t
    cfg = _config(cfg)
    with mpmath.workdps(digits + cfg["extra_dps"]):
        if t == 0:
            return to_mpf(x)
        value = abel_value(fn, x, digits + cfg["guard_digits"], cfg).value
        return abel_inverse(fn, value + to_mpf(t), digits, cfg)


def xexp_half(x, digits: int = 50, cfg: Optional[dict] = None):
    """Half-iterate of ``x exp(x)``.

    ``x < 0`` runs through ``x exp(-x)`` at ``-x``; ``x > 0`` is the inverse
    half-step of Lambert W.
    """
    cfg = _config(cfg)
    with mpmath.workdps(digits + cfg["extra_dps"]):
        x = to_mpf(x)
        if x == 0:
            return mpmath.mpf(0)
        if x < 0:
            return -fractional_iterate("xexp-neg", Fraction(1, 2), -x, digits, cfg)
        return fractional_iterate("lambert-w", Fraction(-1, 2), x, digits, cfg)


def xplusinv_half(x, digits: int = 50, cfg: Optional[dict] = None):
    """Half-iterate of ``x + 1/x`` on ``x > 0``, through ``y/(1+y^2)``."""
    cfg = _config(cfg)
    with mpmath.workdps(digits + cfg["extra_dps"]):
        x = to_mpf(x)
        if x <= 0:
            raise OutOfBasin(f"x + 1/x half-iterate needs x > 0, got {mpmath.nstr(x, 15)}")
        value = abel_value("x-over-1px2", x, digits + cfg["guard_digits"], cfg).value
        return 1 / abel_inverse("x-over-1px2", value + mpmath.mpf(1) / 2, digits, cfg)


def f67(x, digits: int = 50, cfg: Optional[dict] = None):
    """Abel function of ``x exp(x)`` on both half-lines: ``f(x exp(x)) = f(x) + 1``."""
    cfg = _config(cfg)
    with mpmath.workdps(digits + cfg["extra_dps"]):
        x = to_mpf(x)
        if x == 0:
            raise ZeroArgument("the Abel function of x*exp(x) has a pole at 0")
        if x < 0:
            return abel_value("xexp-neg", -x, digits, cfg).value
        return -abel_value("lambert-w", x, digits, cfg).value


HALF_ITERATES = {
    "xexp": xexp_half,
    "xplusinv": xplusinv_half,
}


def half_iterate(name: str, x, digits: int = 50, cfg: Optional[dict] = None):
    """Half-iterate of a composite (``xexp``, ``xplusinv``) or of a catalog function."""
    if name in HALF_ITERATES:
        return HALF_ITERATES[name](x, digits, cfg)
    return fractional_iterate(name, Fraction(1, 2), x, digits, cfg)
