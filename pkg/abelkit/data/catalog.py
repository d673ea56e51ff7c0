"""Base functions ``theta(x) = x + sum_m c_m x^(m tau + 1)`` with an attracting fixed point at 0."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, List, Optional

import mpmath
import pandas as pd

from ..errors import OutOfBasin, OutOfRange, UnknownFunction
from ..series import LogMultiple
from ..utils.formatting import to_mpf
from ..utils.roots import newton_bisect
from .lambertw import lambert_w0

logger = logging.getLogger(__name__)


def _inf():
    return mpmath.inf


@dataclass(frozen=True)
class BaseFunction:
    name: str
    label: str
    tau: int
    gamma: Fraction
    coefficient: Callable[[int], Fraction]
    forward: Callable
    inverse: Callable
    derivative: Optional[Callable] = None
    basin: Callable = _inf
    branch: Callable = _inf
    image: Callable = _inf
    presentation_sign: int = 1
    delta_conjecture: Optional[LogMultiple] = None
    kindred: Optional[str] = None
    index: Optional[str] = None

    def in_basin(self, x) -> bool:
        return 0 < x < self.basin()

    def __str__(self):
        return self.name


## Taylor coefficients c_m, the coefficient of x^(m tau + 1)
def _logistic(m: int) -> Fraction:
    return Fraction(-1) if m == 1 else Fraction(0)


def _sin(m: int) -> Fraction:
    return Fraction((-1) ** m, factorial(2 * m + 1))


def _log1p(m: int) -> Fraction:
    return Fraction((-1) ** m, m + 1)


def _one_minus_exp_neg(m: int) -> Fraction:
    return Fraction((-1) ** m, factorial(m + 1))


def _xexp_neg(m: int) -> Fraction:
    return Fraction((-1) ** m, factorial(m))


def _lambert_w(m: int) -> Fraction:
    n = m + 1
    return Fraction((-n) ** (n - 1), factorial(n))


def _alternating(m: int) -> Fraction:
    return Fraction((-1) ** m)


def _arcsinh(m: int) -> Fraction:
    return Fraction((-1) ** m * factorial(2 * m), 4**m * factorial(m) ** 2 * (2 * m + 1))


def _tanh(m: int) -> Fraction:
    n = m + 1
    num, den = mpmath.bernfrac(2 * n)
    bernoulli = Fraction(int(num), int(den))
    return 2 ** (2 * n) * (2 ** (2 * n) - 1) * bernoulli / factorial(2 * n)


def _arctan(m: int) -> Fraction:
    return Fraction((-1) ** m, 2 * m + 1)


def _binomial_neg(p: Fraction, m: int) -> Fraction:
    """``binom(-p, m)`` for rational ``p``."""
    acc = Fraction(1)
    for i in range(m):
        acc *= -p - i
    return acc / factorial(m)


## numeric evaluators, all at the caller's working precision
def _logistic_inverse(y):
    return 2 * y / (1 + mpmath.sqrt(1 - 4 * y))


def _xexp_neg_inverse(y):
    return -lambert_w0(-y)


def _lambert_w_derivative(x):
    w = lambert_w0(x)
    return w / (x * (1 + w))


def _x_over_1px2_inverse(y):
    return 2 * y / (1 + mpmath.sqrt(1 - 4 * y * y))


def _x_over_sqrt1px_inverse(y):
    return (y * y + y * mpmath.sqrt(y * y + 4)) / 2


REGISTRY: Dict[str, BaseFunction] = {}


def register(fn: BaseFunction) -> BaseFunction:
    REGISTRY[fn.name] = fn
    return fn


register(
    BaseFunction(
        name="logistic",
        label="x*(1-x)",
        index="1",
        tau=1,
        gamma=Fraction(-1),
        coefficient=_logistic,
        forward=lambda x: x * (1 - x),
        inverse=_logistic_inverse,
        derivative=lambda x: 1 - 2 * x,
        basin=lambda: mpmath.mpf(1),
        branch=lambda: mpmath.mpf(1) / 2,
        image=lambda: mpmath.mpf(1) / 4,
        delta_conjecture=LogMultiple(0),
    )
)
register(
    BaseFunction(
        name="sin",
        label="sin(x)",
        index="3",
        tau=2,
        gamma=Fraction(-1, 6),
        coefficient=_sin,
        forward=mpmath.sin,
        inverse=mpmath.asin,
        derivative=mpmath.cos,
        basin=lambda: +mpmath.pi,
        branch=lambda: mpmath.pi / 2,
        image=lambda: mpmath.mpf(1),
        delta_conjecture=LogMultiple(Fraction(3, 5), 3),
        kindred="arcsinh",
    )
)
register(
    BaseFunction(
        name="log1p",
        label="ln(1+x)",
        index="5",
        tau=1,
        gamma=Fraction(-1, 2),
        coefficient=_log1p,
        forward=mpmath.log1p,
        inverse=mpmath.expm1,
        derivative=lambda x: 1 / (1 + x),
        delta_conjecture=LogMultiple(Fraction(1, 3), 2),
        kindred="one-minus-exp-neg",
    )
)
register(
    BaseFunction(
        name="one-minus-exp-neg",
        label="1-exp(-x)",
        index="5b",
        tau=1,
        gamma=Fraction(-1, 2),
        coefficient=_one_minus_exp_neg,
        forward=lambda x: -mpmath.expm1(-x),
        inverse=lambda y: -mpmath.log1p(-y),
        derivative=lambda x: mpmath.exp(-x),
        image=lambda: mpmath.mpf(1),
        kindred="log1p",
    )
)
register(
    BaseFunction(
        name="xexp-neg",
        label="x*exp(-x)",
        index="6",
        tau=1,
        gamma=Fraction(-1),
        coefficient=_xexp_neg,
        forward=lambda x: x * mpmath.exp(-x),
        inverse=_xexp_neg_inverse,
        derivative=lambda x: (1 - x) * mpmath.exp(-x),
        branch=lambda: mpmath.mpf(1),
        image=lambda: mpmath.exp(-1),
        delta_conjecture=LogMultiple(0),
        kindred="lambert-w",
    )
)
register(
    BaseFunction(
        name="lambert-w",
        label="W(x)",
        index="7",
        tau=1,
        gamma=Fraction(-1),
        coefficient=_lambert_w,
        forward=lambert_w0,
        inverse=lambda y: y * mpmath.exp(y),
        derivative=_lambert_w_derivative,
        presentation_sign=-1,
        delta_conjecture=LogMultiple(0),
        kindred="xexp-neg",
    )
)
register(
    BaseFunction(
        name="x-over-1px2",
        label="x/(1+x^2)",
        index="8",
        tau=2,
        gamma=Fraction(-1),
        coefficient=_alternating,
        forward=lambda x: x / (1 + x * x),
        inverse=_x_over_1px2_inverse,
        derivative=lambda x: (1 - x * x) / (1 + x * x) ** 2,
        branch=lambda: mpmath.mpf(1),
        image=lambda: mpmath.mpf(1) / 2,
        delta_conjecture=LogMultiple(Fraction(-1, 4), 2),
    )
)
register(
    BaseFunction(
        name="arcsinh",
        label="arcsinh(x)",
        index="9",
        tau=2,
        gamma=Fraction(-1, 6),
        coefficient=_arcsinh,
        forward=mpmath.asinh,
        inverse=mpmath.sinh,
        derivative=lambda x: 1 / mpmath.sqrt(1 + x * x),
        delta_conjecture=LogMultiple(Fraction(-3, 5), 3),
        kindred="sin",
    )
)
register(
    BaseFunction(
        name="tanh",
        label="tanh(x)",
        index="10",
        tau=2,
        gamma=Fraction(-1, 3),
        coefficient=_tanh,
        forward=mpmath.tanh,
        inverse=mpmath.atanh,
        derivative=lambda x: 1 / mpmath.cosh(x) ** 2,
        image=lambda: mpmath.mpf(1),
        delta_conjecture=LogMultiple(Fraction(3, 20), Fraction(3, 2)),
        kindred="arctan",
    )
)
register(
    BaseFunction(
        name="arctan",
        label="arctan(x)",
        index="11",
        tau=2,
        gamma=Fraction(-1, 3),
        coefficient=_arctan,
        forward=mpmath.atan,
        inverse=mpmath.tan,
        derivative=lambda x: 1 / (1 + x * x),
        image=lambda: mpmath.pi / 2,
        delta_conjecture=LogMultiple(Fraction(-3, 20), Fraction(3, 2)),
        kindred="tanh",
    )
)
register(
    BaseFunction(
        name="x-over-sqrt1px",
        label="x/sqrt(1+x)",
        index="12",
        tau=1,
        gamma=Fraction(-1, 2),
        coefficient=lambda m: _binomial_neg(Fraction(1, 2), m),
        forward=lambda x: x / mpmath.sqrt(1 + x),
        inverse=_x_over_sqrt1px_inverse,
        derivative=lambda x: (x + 2) / (2 * (1 + x) ** (mpmath.mpf(3) / 2)),
        delta_conjecture=LogMultiple(Fraction(-1, 2), 2),
    )
)


def _monotone_inverse(forward, derivative, branch):
    def inverse(y):
        hi = branch()
        if hi == mpmath.inf:
            hi = max(mpmath.mpf(1), 2 * y)
            for _ in range(4000):
                if forward(hi) >= y:
                    break
                hi *= 2
            else:
                raise OutOfRange(f"no preimage of {mpmath.nstr(y, 10)} found")
        return newton_bisect(lambda t: forward(t) - y, derivative, 0, hi)

    return inverse


@lru_cache(maxsize=None)
def power_family(p: Fraction) -> BaseFunction:
    """``x / (1 + x)^p`` for rational ``p > 0``."""
    p = Fraction(p)
    if p <= 0:
        raise ValueError(f"p must be positive, got {p}")
    exponent = lambda: to_mpf(p)  # noqa: E731

    def forward(x):
        return x / (1 + x) ** exponent()

    def derivative(x):
        return (1 + x - exponent() * x) / (1 + x) ** (exponent() + 1)

    if p > 1:
        branch = lambda: 1 / (exponent() - 1)  # noqa: E731
        image = lambda: forward(branch())  # noqa: E731
    elif p == 1:
        branch, image = _inf, lambda: mpmath.mpf(1)
    else:
        branch, image = _inf, _inf

    return BaseFunction(
        name=f"pow-p({p})",
        label=f"x/(1+x)^({p})",
        tau=1,
        gamma=-p,
        coefficient=lambda m: _binomial_neg(p, m),
        forward=forward,
        inverse=_monotone_inverse(forward, derivative, branch),
        derivative=derivative,
        branch=branch,
        image=image,
        delta_conjecture=LogMultiple((1 - p) / (2 * p), p),
    )


@lru_cache(maxsize=None)
def power_family_q(q: int) -> BaseFunction:
    """``x / (1 + x^q)`` for positive integer ``q``; no delta conjecture is known."""
    q = int(q)
    if q < 1:
        raise ValueError(f"q must be a positive integer, got {q}")

    def forward(x):
        return x / (1 + x**q)

    def derivative(x):
        return (1 + x**q - q * x**q) / (1 + x**q) ** 2

    if q > 1:
        branch = lambda: mpmath.root(mpmath.mpf(1) / (q - 1), q)  # noqa: E731
        image = lambda: forward(branch())  # noqa: E731
    else:
        branch, image = _inf, lambda: mpmath.mpf(1)

    return BaseFunction(
        name=f"pow-q({q})",
        label=f"x/(1+x^{q})",
        tau=q,
        gamma=Fraction(-1),
        coefficient=_alternating,
        forward=forward,
        inverse=_monotone_inverse(forward, derivative, branch),
        derivative=derivative,
        branch=branch,
        image=image,
    )


def get_function(name, p: Optional[Fraction] = None, q: Optional[int] = None) -> BaseFunction:
    if isinstance(name, BaseFunction):
        return name
    if name == "pow-p":
        if p is None:
            raise ValueError("pow-p needs a value for p")
        return power_family(Fraction(p))
    if name == "pow-q":
        if q is None:
            raise ValueError("pow-q needs a value for q")
        return power_family_q(q)
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownFunction(f"unknown function {name!r}; choose from {', '.join(list_functions())}") from None


def list_functions() -> List[str]:
    return list(REGISTRY) + ["pow-p", "pow-q"]


def taylor_coefficient(fn: BaseFunction, m: int) -> Fraction:
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    return Fraction(fn.coefficient(m))


def eval_forward(fn: BaseFunction, x, prec: Optional[int] = None):
    """``theta(x)`` for ``x`` in the basin; ``prec`` in bits, else the current precision."""
    with mpmath.workprec(prec or mpmath.mp.prec):
        x = mpmath.mpf(x)
        if x == 0:
            return mpmath.mpf(0)
        if not fn.in_basin(x):
            raise OutOfBasin(f"{fn.name}: {mpmath.nstr(x, 15)} is outside the basin (0, {mpmath.nstr(fn.basin(), 15)})")
        return fn.forward(x)


def eval_inverse(fn: BaseFunction, y, prec: Optional[int] = None):
    """Preimage of ``y`` on the monotone branch ``(0, branch]`` next to the fixed point."""
    with mpmath.workprec(prec or mpmath.mp.prec):
        y = mpmath.mpf(y)
        if y <= 0:
            raise OutOfRange(f"{fn.name}: inverse needs y > 0, got {mpmath.nstr(y, 15)}")
        top = fn.image()
        if y >= top:
            branch = fn.branch()
            # the peak itself is attained only on a finite branch
            if branch != mpmath.inf and y - top <= mpmath.eps * 1024 * top:
                return branch
            raise OutOfRange(f"{fn.name}: {mpmath.nstr(y, 15)} is outside the range (0, {mpmath.nstr(top, 15)})")
        return fn.inverse(y)


def catalog_frame() -> pd.DataFrame:
    rows = []
    for fn in REGISTRY.values():
        with mpmath.workdps(15):
            basin = mpmath.nstr(fn.basin(), 8)
        rows.append(
            {
                "name": fn.name,
                "theta": fn.label,
                "tau": fn.tau,
                "gamma": str(fn.gamma),
                "basin": f"(0, {basin})",
                "delta": "" if fn.delta_conjecture is None else str(fn.delta_conjecture),
                "kindred": fn.kindred or "",
            }
        )
    rows.append(
        {
            "name": "pow-p",
            "theta": "x/(1+x)^p",
            "tau": 1,
            "gamma": "-p",
            "basin": "(0, +inf)",
            "delta": "((1-p)/(2p))*ln(p)",
            "kindred": "",
        }
    )
    rows.append(
        {
            "name": "pow-q",
            "theta": "x/(1+x^q)",
            "tau": "q",
            "gamma": "-1",
            "basin": "(0, +inf)",
            "delta": "",
            "kindred": "",
        }
    )
    return pd.DataFrame(rows)
