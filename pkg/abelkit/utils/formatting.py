import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

_PI = re.compile(r"^(?P<num>[+-]?\d*)\s*\*?\s*pi(?:\s*/\s*(?P<den>\d+))?$")


@dataclass(frozen=True)
class PiMultiple:
    """``coefficient * pi``, evaluated lazily at the working precision."""

    coefficient: Fraction

    def evaluate(self):
        return self.coefficient.numerator * mpmath.pi / self.coefficient.denominator

    def __str__(self):
        c = self.coefficient
        head = "" if c.numerator == 1 else ("-" if c.numerator == -1 else str(c.numerator))
        return f"{head}pi" + ("" if c.denominator == 1 else f"/{c.denominator}")


Number = Union[Fraction, PiMultiple]


def parse_number(text: str) -> Number:
    """Parse ``3/2``, ``-1``, ``0.25``, ``1e-3``, ``pi``, ``pi/2`` or ``3pi/4`` exactly."""
    if isinstance(text, (Fraction, PiMultiple)):
        return text
    raw = str(text).strip().lower()
    match = _PI.match(raw)
    if match:
        num = match.group("num")
        num = 1 if num in ("", "+") else (-1 if num == "-" else int(num))
        den = int(match.group("den") or 1)
        if den == 0:
            raise ValueError(f"malformed number {text!r}")
        return PiMultiple(Fraction(num, den))
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed number {text!r}") from None


def to_mpf(value):
    """Big-float value of a parsed number under the current working precision."""
    if isinstance(value, str):
        value = parse_number(value)
    if isinstance(value, PiMultiple):
        return value.evaluate()
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def format_truncated(value, digits: int) -> str:
    """Decimal string with exactly ``digits`` digits after the point, truncated toward zero."""
    if digits < 0:
        raise ValueError(f"digits must be non-negative, got {digits}")
    if not isinstance(value, mpmath.mpf):
        value = to_mpf(value)
    if not mpmath.isfinite(value):
        return str(value)
    # 10**digits is exact, so the product needs the mantissa width plus 3.33 bits per digit
    with mpmath.workprec(max(mpmath.mp.prec, value.bc) + 4 * digits + 64):
        scaled = int(mpmath.floor(abs(value) * mpmath.mpf(10) ** digits))
    text = str(scaled).rjust(digits + 1, "0")
    body = text if digits == 0 else f"{text[:-digits]}.{text[-digits:]}"
    return f"-{body}" if value < 0 and scaled else body


def matched_digits(computed: str, expected: str) -> int:
    """Number of leading digits after the decimal point on which two decimal strings agree.

    Returns 0 when the signs or the integer parts differ.
    """
    computed, expected = computed.strip(), expected.strip()
    if computed.startswith("-") != expected.startswith("-"):
        return 0
    head_c, _, tail_c = computed.lstrip("-").partition(".")
    head_e, _, tail_e = expected.lstrip("-").partition(".")
    if head_c != head_e:
        return 0
    count = 0
    for a, b in zip(tail_c, tail_e):
        if a != b:
            break
        count += 1
    return count
