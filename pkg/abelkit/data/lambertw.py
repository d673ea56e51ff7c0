import logging

import mpmath

from ..errors import OutOfRange

logger = logging.getLogger(__name__)

SEED_BITS = 53
MAX_REFINEMENTS = 60


def lambert_w0(x):
    """Principal branch ``W0(x)`` on ``[-1/e, oo)`` at the caller's precision.

    Seeded from a double-precision value and refined by Newton's method on
    ``w e^w - x`` with the working precision doubled at each step.
    """
    x = mpmath.mpf(x)
    target = mpmath.mp.prec
    if x == 0:
        return mpmath.mpf(0)
    branch_point = -mpmath.exp(-1)
    if x < branch_point:
        if branch_point - x > mpmath.eps * 64:
            raise OutOfRange(f"W0 undefined below -1/e, got {mpmath.nstr(x, 10)}")
        return mpmath.mpf(-1)
    if x - branch_point <= mpmath.eps * 4:
        return mpmath.mpf(-1)

    with mpmath.workprec(SEED_BITS):
        w = mpmath.re(mpmath.lambertw(x))

    prec = SEED_BITS
    while prec < target + 20:
        prec = min(2 * prec, target + 20)
        with mpmath.workprec(prec):
            w = _newton_step(w, x)

    # near -1/e the derivative vanishes and convergence is no longer quadratic
    with mpmath.workprec(target + 20):
        for _ in range(MAX_REFINEMENTS):
            w_next = _newton_step(w, x)
            if abs(w_next - w) <= mpmath.eps * max(1, abs(w)):
                w = w_next
                break
            w = w_next
        else:
            logger.debug(f"lambert_w0({mpmath.nstr(x, 10)}) used all refinements")
    return +w


def _newton_step(w, x):
    ew = mpmath.exp(w)
    slope = ew * (w + 1)
    if slope == 0:
        return w
    return w - (w * ew - x) / slope
