"""Exact Gaussian-rational scalars, the field Q(i).

Real and imaginary parts are :class:`fractions.Fraction`, which keeps every
value reduced with a positive denominator after each operation.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

from nullcert import counting

Scalar = Union["GaussianRational", int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussianZeroDivision(ZeroDivisionError):
    """Raised on division by the zero Gaussian rational."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GaussianRational:
    """``re + im*i`` with ``re`` and ``im`` exact rationals.

    Immutable and hashable.  Integers and Fractions are accepted wherever a
    GaussianRational is expected; floats are rejected.
    """

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        c = counting._ACTIVE.get()
        if c is not None:
            c.arith_ops += 1
            b = max(re.numerator.bit_length(), re.denominator.bit_length(),
                    im.numerator.bit_length(), im.denominator.bit_length())
            if b > c.bits:
                c.bits = b
        return obj

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        return cls(x, 0)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # canonical-form accessors
    @property
    def re_num(self) -> int:
        return self.re.numerator

    @property
    def re_den(self) -> int:
        return self.re.denominator

    @property
    def im_num(self) -> int:
        return self.im.numerator

    @property
    def im_den(self) -> int:
        return self.im.denominator

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._make(a * c, _ZERO)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise GaussianZeroDivision("division by zero Gaussian rational")
            return GaussianRational._make(1 / a, _ZERO)
        norm = a * a + b * b
        return GaussianRational._make(a / norm, -b / norm)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not d:
            if not c:
                raise GaussianZeroDivision("division by zero Gaussian rational")
            if not b:
                return GaussianRational._make(a / c, _ZERO)
            return GaussianRational._make(a / c, b / c)
        norm = c * c + d * d
        return GaussianRational._make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self.re, -self.im)

    # comparison / hashing: equality only, Q(i) is not ordered
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = abs(self.im)
        im_s = "i" if im == 1 else f"{im}i"
        if not self.re:
            return f"-{im_s}" if self.im < 0 else im_s
        sign = "-" if self.im < 0 else "+"
        return f"({self.re} {sign} {im_s})"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gq(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or ``"a/b"`` strings."""
    return GaussianRational(Fraction(re), Fraction(im))


def gq_arith(op: str, a: Scalar, b: Scalar) -> GaussianRational:
    a = GaussianRational.coerce(a)
    b = GaussianRational.coerce(b)
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operation {op!r}")
