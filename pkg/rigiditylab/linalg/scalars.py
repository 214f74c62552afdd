"""
Exact scalars.

Real coordinates are ``fractions.Fraction`` values (always in lowest terms
with a positive denominator). Complex coordinates are Gaussian rationals,
``GaussianRational(re, im)`` with both parts Fractions. Conjugation is an
explicit method and never happens implicitly in arithmetic.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Dict, Union

from rigiditylab.core.exceptions import NotReal, ParseError

ExactScalar = Fraction


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _coerce(other: Any) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** -exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- structure ----------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    @property
    def is_imaginary(self) -> bool:
        return self.re == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ComplexExactScalar = GaussianRational
Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def to_exact(value: Any) -> Scalar:
    """Convert ints, strings, floats and exact values into an exact scalar.

    Floats convert to the exact binary value they hold.
    """
    if isinstance(value, (Fraction, GaussianRational)):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, float, str)):
        return Fraction(value)
    if isinstance(value, complex):
        return GaussianRational(Fraction(value.real), Fraction(value.imag))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def is_real_scalar(value: Scalar) -> bool:
    if isinstance(value, GaussianRational):
        return value.is_real
    return True


def real_value(value: Scalar) -> Fraction:
    """Return value as a Fraction, refusing values with an imaginary part."""
    if isinstance(value, GaussianRational):
        if not value.is_real:
            raise NotReal(f"{value} has a nonzero imaginary part")
        return value.re
    return Fraction(value)


def as_gaussian(value: Scalar) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(value, 0)


def conjugate(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def denominator_lcm(value: Scalar) -> int:
    """Least positive integer that clears the denominators of value."""
    if isinstance(value, GaussianRational):
        return math.lcm(value.re.denominator, value.im.denominator)
    return Fraction(value).denominator


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    value = Fraction(value)
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


# ---------------------------------------------------------------------------
# JSON form: "p/q" strings, complex as {"re": "p/q", "im": "p/q"}
# ---------------------------------------------------------------------------

def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def scalar_to_json(value: Scalar) -> Union[str, Dict[str, str]]:
    if isinstance(value, GaussianRational):
        return {"re": format_rational(value.re), "im": format_rational(value.im)}
    return format_rational(value)


def _parse_rational(raw: Any) -> Fraction:
    if isinstance(raw, bool):
        raise ParseError(f"invalid rational literal: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"invalid rational literal: {raw!r}") from e
    if isinstance(raw, float):
        return Fraction(raw)
    raise ParseError(f"invalid rational literal: {raw!r}")


def scalar_from_json(raw: Any) -> Scalar:
    if isinstance(raw, dict):
        if set(raw) - {"re", "im"}:
            raise ParseError(f"unexpected keys in complex literal: {sorted(raw)}")
        return GaussianRational(
            _parse_rational(raw.get("re", "0")),
            _parse_rational(raw.get("im", "0")),
        )
    return _parse_rational(raw)
