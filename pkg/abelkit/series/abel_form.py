from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import mpmath

from ..errors import GridMismatch
from ..utils.formatting import to_mpf
from .linear import as_rational
from .power import LaurentSeries, PowerSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelForm:
    """``A x^(-tau) + B ln(x) + sum_m t_m x^(m tau)`` near the fixed point."""

    tau: int
    pole: Fraction
    log: Fraction
    taylor: PowerSeries

    def __post_init__(self):
        for n, _ in self.taylor.items():
            if n <= 0 or n % self.tau:
                raise GridMismatch(f"taylor exponent {n} is not a positive multiple of tau={self.tau}")

    @property
    def terms(self) -> List[Tuple[int, Fraction]]:
        """``(m, t_m)`` for every grid index known to the truncation order."""
        known = self.taylor.order // self.tau
        return [(m, as_rational(self.taylor.coefficient_at(m * self.tau))) for m in range(1, known + 1)]

    @property
    def num_terms(self) -> int:
        return self.taylor.order // self.tau

    def coefficient(self, m: int) -> Fraction:
        return as_rational(self.taylor.coefficient_at(m * self.tau))

    def __neg__(self) -> "AbelForm":
        return AbelForm(self.tau, -self.pole, -self.log, -self.taylor)

    def tail(self, x, count: int = 2) -> List:
        """Magnitudes of the last ``count`` retained terms at ``x`` (mpf arithmetic)."""
        out = []
        for m, t in self.terms[-count:]:
            out.append(abs(to_mpf(t)) * x ** (m * self.tau))
        return out

    def evaluate(self, x, count: Optional[int] = None):
        """Value at mpf ``x > 0`` under the caller's working precision."""
        terms = self.terms if count is None else self.terms[:count]
        y = x**self.tau
        acc = mpmath.mpf(0)
        power = mpmath.mpf(1)
        for m, t in terms:
            power *= y
            if t:
                acc += to_mpf(t) * power
        return to_mpf(self.pole) / y + to_mpf(self.log) * mpmath.log(x) + acc

    def formal_derivative(self) -> LaurentSeries:
        """Exact ``-tau A x^(-tau-1) + B x^-1 + sum m tau t_m x^(m tau - 1)``."""
        coeffs = {n - 1: n * c for n, c in self.taylor.items()}
        coeffs[-self.tau - 1] = -self.tau * self.pole
        coeffs[-1] = self.log
        return LaurentSeries(coeffs, self.taylor.order - 1)

    def derivative(self, x):
        """``d/dx`` of the truncated expansion, i.e. the truncated ``1/lambda``."""
        y = x**self.tau
        acc = mpmath.mpf(0)
        for m, t in self.terms:
            if t:
                acc += to_mpf(t) * (m * self.tau) * x ** (m * self.tau - 1)
        return -self.tau * to_mpf(self.pole) / (y * x) + to_mpf(self.log) / x + acc

    def to_text(self, var: str = "x") -> str:
        head = []
        if self.pole:
            power = var if self.tau == 1 else f"{var}^{self.tau}"
            if self.pole.denominator == 1:
                head.append(f"{self.pole}/{power}")
            else:
                head.append(f"{self.pole.numerator}/({self.pole.denominator} {power})")
        if self.log:
            sign = "-" if self.log < 0 else "+"
            head.append(f"{sign} {abs(self.log)} ln({var})")
        body = self.taylor.to_text(var)
        if body.startswith("-"):
            body = "- " + body[1:]
        elif not body.startswith("0"):
            body = "+ " + body
        else:
            body = body[2:]
        return " ".join(head + [body]).strip()


def integrate_with_log(d: PowerSeries, tau: int) -> AbelForm:
    """Term-by-term antiderivative of ``1/lambda`` with ``x^-1 -> ln x``.

    The integration constant is exactly zero.
    """
    pole, log = Fraction(0), Fraction(0)
    taylor = {}
    for n, c in d.items():
        c = as_rational(c)
        if n == -tau - 1:
            pole = c / (-tau)
        elif n == -1:
            log = c
        elif n >= 0 and (n + 1) % tau == 0:
            taylor[n + 1] = c / (n + 1)
        else:
            raise GridMismatch(f"x^{n} is off the exponent grid -{tau + 1} + m*{tau}")
    order = d.order + 1
    order -= order % tau
    return AbelForm(tau, pole, log, PowerSeries(taylor, max(order, 0)))
