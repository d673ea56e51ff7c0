from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..errors import BeyondTruncation, BothSymbolic, NonzeroConstantTerm, ZeroLeadingCoefficient
from .linear import LinearForm, Scalar, as_rational

logger = logging.getLogger(__name__)


def _is_zero(c: Scalar) -> bool:
    return not c


def _normalize(c: Scalar) -> Scalar:
    if isinstance(c, int):
        return Fraction(c)
    return c


class PowerSeries:
    """Truncated formal power series ``sum c_n x^n + O(x^(order+1))``.

    Coefficients are Fractions or LinearForms, stored sparsely by exponent.
    Absent exponents up to ``order`` are exactly zero; exponents above ``order``
    are unknown.
    """

    __slots__ = ("_coeffs", "_order")
    allow_negative = False

    def __init__(self, coeffs: Optional[Mapping[int, Scalar]] = None, order: int = 0):
        order = int(order)
        clean: Dict[int, Scalar] = {}
        for n, c in (coeffs or {}).items():
            n = int(n)
            if n > order:
                raise ValueError(f"exponent {n} beyond truncation order {order}")
            if n < 0 and not self.allow_negative:
                raise ValueError(f"negative exponent {n} in a power series; use LaurentSeries")
            if not _is_zero(c):
                clean[n] = _normalize(c)
        self._coeffs = clean
        self._order = order

    # -- constructors -------------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1, order: Optional[int] = None) -> "PowerSeries":
        order = exponent if order is None else order
        return _make({exponent: coeff}, order)

    @classmethod
    def from_rows(cls, rows: Iterable[Tuple[int, int, int]], order: int) -> "PowerSeries":
        return _make({int(n): Fraction(int(p), int(q)) for n, p, q in rows}, order)

    # -- basic properties ---------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Dict[int, Scalar]:
        return dict(self._coeffs)

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; ``order + 1`` for the zero series."""
        if not self._coeffs:
            return self._order + 1
        return min(self._coeffs)

    @property
    def is_symbolic(self) -> bool:
        return any(isinstance(c, LinearForm) and c.is_symbolic for c in self._coeffs.values())

    def items(self) -> List[Tuple[int, Scalar]]:
        return sorted(self._coeffs.items())

    def __iter__(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._coeffs)

    def coefficient_at(self, n: int) -> Scalar:
        if n > self._order:
            raise BeyondTruncation(f"coefficient of x^{n} requested, series known only through x^{self._order}")
        return self._coeffs.get(n, Fraction(0))

    __getitem__ = coefficient_at

    # -- arithmetic ---------------------------------------------------------
    def truncate(self, order: int) -> "PowerSeries":
        order = min(order, self._order)
        return _make({n: c for n, c in self._coeffs.items() if n <= order}, order)

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            order = min(self._order, other._order)
            out = {n: c for n, c in self._coeffs.items() if n <= order}
            for n, c in other._coeffs.items():
                if n <= order:
                    out[n] = out[n] + c if n in out else c
            return _make(out, order)
        if isinstance(other, (int, Fraction, LinearForm)):
            return self + _make({0: other}, self._order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return _make({n: -c for n, c in self._coeffs.items()}, self._order)

    def __sub__(self, other):
        if isinstance(other, (PowerSeries, int, Fraction, LinearForm)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Scalar) -> "PowerSeries":
        if isinstance(factor, LinearForm) and factor.is_symbolic and self.is_symbolic:
            raise BothSymbolic("scaling a symbolic series by a symbolic factor")
        return _make({n: c * factor for n, c in self._coeffs.items()}, self._order)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return _cauchy(self, other)
        if isinstance(other, (int, Fraction, LinearForm)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LinearForm)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "PowerSeries":
        return series_int_pow(self, k)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``x^k``."""
        return _make({n + k: c for n, c in self._coeffs.items()}, self._order + k)

    def derivative(self) -> "PowerSeries":
        return _make({n - 1: n * c for n, c in self._coeffs.items() if n != 0}, self._order - 1)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        return series_compose(self, inner)

    def __call__(self, inner: "PowerSeries") -> "PowerSeries":
        return series_compose(self, inner)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if self._order != other._order:
            return False
        keys = set(self._coeffs) | set(other._coeffs)
        return all(self.coefficient_at(n) == other.coefficient_at(n) for n in keys)

    __hash__ = None

    # -- serialization ------------------------------------------------------
    def to_text(self, var: str = "x", show_order: bool = True) -> str:
        parts = []
        for n, c in self.items():
            if isinstance(c, LinearForm) and c.is_symbolic:
                body, negative = f"({c})", False
            else:
                c = as_rational(c)
                body, negative = str(abs(c)), c < 0
            if n != 0:
                mono = var if n == 1 else f"{var}^{n}"
                body = mono if body == "1" else f"{body} {mono}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"{'-' if negative else '+'} {body}")
        if not parts:
            parts.append("0")
        if show_order:
            parts.append(f"+ O({var}^{self._order + 1})")
        return " ".join(parts)

    def to_rows(self) -> List[Tuple[int, int, int]]:
        rows = []
        for n, c in self.items():
            c = as_rational(c)
            rows.append((n, c.numerator, c.denominator))
        return rows

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()})"


class LaurentSeries(PowerSeries):
    """Truncated series allowing finitely many negative exponents."""

    __slots__ = ()
    allow_negative = True


def _make(coeffs: Mapping[int, Scalar], order: int) -> PowerSeries:
    if any(n < 0 for n in coeffs):
        return LaurentSeries(coeffs, order)
    return PowerSeries(coeffs, order)


def _cauchy(a: PowerSeries, b: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    if a.is_symbolic and b.is_symbolic:
        raise BothSymbolic("both factors depend on the EJ unknown")
    product_order = min(a.order + b.valuation, b.order + a.valuation)
    if order is not None:
        product_order = min(product_order, order)
    left, right = a.items(), b.items()
    out: Dict[int, Scalar] = {}
    for na, ca in left:
        limit = product_order - na
        for nb, cb in right:
            if nb > limit:
                break
            n = na + nb
            term = ca * cb
            out[n] = out[n] + term if n in out else term
    return _make(out, product_order)


## module level operations
def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a + b


def series_mul(a: PowerSeries, b: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """Cauchy product truncated at ``min(N_a + v_b, N_b + v_a)`` (and at ``order`` if given)."""
    return _cauchy(a, b, order)


def series_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """``outer(inner(x))``; the inner series must vanish at 0."""
    if inner.valuation < 0:
        raise ValueError("inner series of a composition must be a power series")
    if inner.order >= 0 and inner.coefficient_at(0):
        raise NonzeroConstantTerm("inner series has a nonzero constant term")
    if isinstance(outer, LaurentSeries) and outer.valuation < 0:
        raise ValueError("outer series of a composition must be a power series")
    order = min(outer.order, inner.order)
    result = _make({0: outer.coefficient_at(0)} if outer.order >= 0 else {}, order)
    power = _make({0: Fraction(1)}, order)
    top = max((n for n, _ in outer.items()), default=0)
    for k in range(1, top + 1):
        power = _cauchy(power, inner, order)
        if power.valuation > order:
            break
        c = outer.coefficient_at(k)
        if not _is_zero(c):
            result = result + power.scale(c)
    return result.truncate(order)


def series_int_pow(a: PowerSeries, k: int) -> PowerSeries:
    if k < 0:
        raise ValueError(f"negative power {k}")
    if k == 0:
        return _make({0: Fraction(1)}, a.order)
    result = a
    for _ in range(k - 1):
        result = _cauchy(result, a)
    return result


def coefficient_at(s: PowerSeries, n: int) -> Scalar:
    return s.coefficient_at(n)


def coefficient_of_product(a: PowerSeries, b: PowerSeries, n: int) -> Scalar:
    """``[x^n]{a*b}`` without forming the product."""
    if n > min(a.order + b.valuation, b.order + a.valuation):
        raise BeyondTruncation(f"coefficient of x^{n} is not determined by the factors")
    if a.is_symbolic and b.is_symbolic:
        raise BothSymbolic("both factors depend on the EJ unknown")
    total: Scalar = Fraction(0)
    coeffs = b.coeffs
    for na, ca in a.items():
        cb = coeffs.get(n - na)
        if cb is not None:
            total = total + ca * cb
    return total


def laurent_reciprocal(a: PowerSeries, valuation: Optional[int] = None) -> LaurentSeries:
    """Series of ``1/a`` for ``a = gamma x^v (1 + ...)`` with Rational coefficients.

    The result starts at ``x^(-v)`` and is known through ``x^(N - 2v)``.
    """
    v = a.valuation if valuation is None else valuation
    if v > a.order:
        raise ZeroLeadingCoefficient("cannot invert a series with no known nonzero coefficient")
    lead = as_rational(a.coefficient_at(v))
    if lead == 0:
        raise ZeroLeadingCoefficient(f"coefficient of x^{v} is zero")
    if a.valuation < v:
        raise ValueError(f"series has terms below the stated valuation {v}")

    rel_order = a.order - v
    unit = [(n - v, as_rational(c) / lead) for n, c in a.items() if n > v]
    inv = [Fraction(0)] * (rel_order + 1)
    inv[0] = Fraction(1)
    for n in range(1, rel_order + 1):
        acc = Fraction(0)
        for k, u in unit:
            if k > n:
                break
            acc += u * inv[n - k]
        inv[n] = -acc
    coeffs = {n - v: c / lead for n, c in enumerate(inv) if c}
    return LaurentSeries(coeffs, rel_order - v)
