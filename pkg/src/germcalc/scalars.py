"""Exact coefficient fields: the rationals and the Gaussian rationals."""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Rational


class Field(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"

    @classmethod
    def parse(cls, value: "Field | str") -> "Field":
        if isinstance(value, Field):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown field {value!r} (expected 'real' or 'complex')") from None


class FieldMismatch(TypeError):
    """Operands live over different coefficient fields."""


class GaussianRational:
    """An element a + b*i of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return GaussianRational(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = GaussianRational(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def zero(field: Field):
    return Fraction(0) if field is Field.REAL else GaussianRational(0)


def one(field: Field):
    return Fraction(1) if field is Field.REAL else GaussianRational(1)


def coerce(value, field: Field):
    """Embed an int/Fraction/GaussianRational into ``field``.

    Raises FieldMismatch for a non-real Gaussian value under the real field.
    """
    if field is Field.REAL:
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise FieldMismatch(f"{value} is not real")
            return value.re
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(value.numerator, value.denominator)
        raise TypeError(f"cannot use {value!r} as an exact scalar")
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction, Rational)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {value!r} as an exact scalar")


def field_of(value) -> Field:
    return Field.COMPLEX if isinstance(value, GaussianRational) else Field.REAL


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(c) -> str:
    """Canonical text for a scalar, parseable by the expression parser."""
    if isinstance(c, GaussianRational):
        if c.im == 0:
            return _format_fraction(c.re)
        if c.im == 1:
            im = "i"
        elif c.im == -1:
            im = "-i"
        else:
            im = f"{_format_fraction(c.im)}*i"
        if c.re == 0:
            return im
        sign = "-" if c.im < 0 else "+"
        mag = im.lstrip("-")
        return f"({_format_fraction(c.re)} {sign} {mag})"
    return _format_fraction(Fraction(c))
