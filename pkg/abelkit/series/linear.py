from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import BothSymbolic

Scalar = Union[int, Fraction, "LinearForm"]


@dataclass(frozen=True)
class LinearForm:
    """Affine expression ``constant + slope * u`` in the single EJ unknown ``u``."""

    constant: Fraction = Fraction(0)
    slope: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(self, "slope", Fraction(self.slope))

    @classmethod
    def unknown(cls) -> "LinearForm":
        return cls(Fraction(0), Fraction(1))

    @property
    def is_symbolic(self) -> bool:
        return self.slope != 0

    def __add__(self, other: Scalar) -> "LinearForm":
        if isinstance(other, LinearForm):
            return LinearForm(self.constant + other.constant, self.slope + other.slope)
        if isinstance(other, (int, Fraction)):
            return LinearForm(self.constant + other, self.slope)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "LinearForm":
        return LinearForm(-self.constant, -self.slope)

    def __sub__(self, other: Scalar) -> "LinearForm":
        if isinstance(other, (LinearForm, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other: Scalar) -> "LinearForm":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LinearForm":
        if isinstance(other, LinearForm):
            if self.is_symbolic and other.is_symbolic:
                raise BothSymbolic(f"product of two symbolic forms: ({self}) * ({other})")
            if other.is_symbolic:
                return other * self.constant
            return self * other.constant
        if isinstance(other, (int, Fraction)):
            return LinearForm(self.constant * other, self.slope * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearForm):
            return self.constant == other.constant and self.slope == other.slope
        if isinstance(other, (int, Fraction)):
            return self.slope == 0 and self.constant == other
        return NotImplemented

    def __hash__(self):
        if self.slope == 0:
            return hash(self.constant)
        return hash((self.constant, self.slope))

    def __bool__(self) -> bool:
        return self.constant != 0 or self.slope != 0

    def substitute(self, value: Fraction) -> Fraction:
        return self.constant + self.slope * value

    def __str__(self) -> str:
        if not self.is_symbolic:
            return str(self.constant)
        if self.constant == 0:
            return f"{self.slope}*u"
        sign = "-" if self.slope < 0 else "+"
        return f"{self.constant} {sign} {abs(self.slope)}*u"


def as_rational(value: Scalar) -> Fraction:
    """Collapse a scalar with no dependence on ``u`` to a Fraction."""
    if isinstance(value, LinearForm):
        if value.is_symbolic:
            raise ValueError(f"{value} still depends on the unknown")
        return value.constant
    return Fraction(value)
