from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath


@dataclass(frozen=True)
class LogMultiple:
    """Exact constant ``coefficient * ln(argument)`` with rational parts.

    Stored canonically: zero is ``0 * ln(1)``, otherwise ``argument > 1``.
    """

    coefficient: Fraction
    argument: Fraction = Fraction(1)

    def __post_init__(self):
        coefficient, argument = Fraction(self.coefficient), Fraction(self.argument)
        if argument <= 0:
            raise ValueError(f"logarithm of non-positive {argument}")
        if argument < 1:
            coefficient, argument = -coefficient, 1 / argument
        if coefficient == 0 or argument == 1:
            coefficient, argument = Fraction(0), Fraction(1)
        object.__setattr__(self, "coefficient", coefficient)
        object.__setattr__(self, "argument", argument)

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __neg__(self) -> "LogMultiple":
        return LogMultiple(-self.coefficient, self.argument)

    def evaluate(self, dps: int = 50):
        with mpmath.workdps(dps):
            if self.is_zero:
                return mpmath.mpf(0)
            c = mpmath.mpf(self.coefficient.numerator) / self.coefficient.denominator
            r = mpmath.mpf(self.argument.numerator) / self.argument.denominator
            return c * mpmath.log(r)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"({self.coefficient})*ln({self.argument})"
