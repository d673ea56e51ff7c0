"""Sample data behind the half-iterate and Abel-function figures (CSV, no rendering)."""

import logging
import sys
from fractions import Fraction
from typing import Optional

import fsspec
import mpmath
import numpy as np
import pandas as pd
from tqdm import tqdm

from ..data.catalog import eval_forward, get_function
from ..errors import NumericFailure
from ..models.abel import f67, fractional_iterate, half_iterate
from .formatting import to_mpf

logger = logging.getLogger(__name__)

default_cfg = {
    "samples": 41,
    "digits": 20,
}

## default x-ranges per plot name
RANGES = {
    "xexp": (Fraction(-3), Fraction(1)),
    "xplusinv": (Fraction(1, 5), Fraction(4)),
    "f67": (Fraction(-3), Fraction(2)),
}


def _xexp(x):
    return x * mpmath.exp(x)


def _xplusinv(x):
    return x + 1 / x


COMPOSITES = {
    "xexp": _xexp,
    "xplusinv": _xplusinv,
}


def default_range(name: str):
    if name in RANGES:
        return RANGES[name]
    fn = get_function(name)
    with mpmath.workdps(15):
        basin = fn.basin()
    top = Fraction(4) if basin == mpmath.inf else Fraction(str(mpmath.nstr(basin, 6))) * Fraction(9, 10)
    return Fraction(top, 40), top


def sample_points(lo, hi, samples: int):
    """Exact decimal abscissae on ``numpy.linspace(lo, hi, samples)``."""
    if samples < 2:
        raise ValueError(f"samples must be at least 2, got {samples}")
    if hi <= lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    grid = np.linspace(float(lo), float(hi), samples)
    return [Fraction(f"{x:.12g}") for x in grid]


def plot_data(name: str, lo=None, hi=None, samples: Optional[int] = None, digits: Optional[int] = None) -> pd.DataFrame:
    """``x, theta(x), theta^[1/2](x)`` rows; ``f67`` yields ``x, theta, abel`` instead.

    Points where the evaluation fails numerically are logged and left out.
    """
    samples = samples or default_cfg["samples"]
    digits = digits or default_cfg["digits"]
    if lo is None or hi is None:
        lo_default, hi_default = default_range(name)
        lo = lo_default if lo is None else lo
        hi = hi_default if hi is None else hi
    lo, hi = Fraction(lo), Fraction(hi)

    if name == "f67":
        columns = ["x", "theta", "abel"]
        forward, second = _xexp, lambda x: f67(x, digits)
    elif name in COMPOSITES:
        columns = ["x", "theta", "half_iterate"]
        forward, second = COMPOSITES[name], lambda x: half_iterate(name, x, digits)
    else:
        fn = get_function(name)
        columns = ["x", "theta", "half_iterate"]
        forward = lambda x: eval_forward(fn, x)  # noqa: E731
        second = lambda x: fractional_iterate(fn, Fraction(1, 2), x, digits)  # noqa: E731

    rows = []
    for x in tqdm(sample_points(lo, hi, samples), desc=f"plot {name}", disable=None, leave=False):
        if x == 0 and name in ("f67", "xplusinv"):
            continue
        with mpmath.workdps(digits + 10):
            try:
                value = to_mpf(x)
                rows.append([str(x), mpmath.nstr(forward(value), digits), mpmath.nstr(second(value), digits)])
            except NumericFailure as e:
                logger.warning(f"{name}: skipping x={x}: {e}")
    return pd.DataFrame(rows, columns=columns)


def write_csv(frame: pd.DataFrame, out: Optional[str] = None):
    """Write ``frame`` to ``out`` (any fsspec URL) or to stdout."""
    if out is None or out == "-":
        frame.to_csv(sys.stdout, index=False)
        return
    with fsspec.open(out, "w") as fp:
        frame.to_csv(fp, index=False)
    logger.info(f"wrote {len(frame)} rows to {out}")
