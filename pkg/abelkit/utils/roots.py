import logging

import mpmath

from ..errors import PrecisionUnreachable

logger = logging.getLogger(__name__)


def newton_bisect(f, df, lo, hi, tol=None, max_iterations=400):
    """Root of a monotone ``f`` on ``[lo, hi]`` at the caller's working precision.

    Newton steps that leave the current bracket are replaced by bisection, so the
    bracket shrinks on every iteration. ``f(lo)`` and ``f(hi)`` must differ in sign.
    """
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise ValueError(f"root is not bracketed by [{mpmath.nstr(lo, 8)}, {mpmath.nstr(hi, 8)}]")
    if tol is None:
        tol = mpmath.eps * 16
    increasing = f_hi > 0

    x = (lo + hi) / 2
    for i in range(max_iterations):
        fx = f(x)
        if fx == 0:
            return x
        if (fx > 0) == increasing:
            hi = x
        else:
            lo = x
        slope = df(x)
        step = fx / slope if slope else None
        candidate = x - step if step is not None else None
        if candidate is None or not (lo < candidate < hi):
            candidate = (lo + hi) / 2
        if abs(candidate - x) <= tol * max(1, abs(x)):
            return candidate
        x = candidate
    logger.debug(f"newton_bisect stalled at bracket width {mpmath.nstr(hi - lo, 5)}")
    raise PrecisionUnreachable(f"no convergence after {max_iterations} iterations")
