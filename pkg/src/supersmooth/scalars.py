"""Scalar carriers: exact (Gaussian) rationals and binary64 complex.

Exact coefficients are ``int``/``Fraction`` when real and
:class:`GaussianRational` otherwise.  Float coefficients are ``float`` or
``complex``.  The two carriers never mix silently.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number

DEFAULT_TOL = 1e-9


class GaussianRational:
    """Exact complex number ``re + i·im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(v):
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return GaussianRational(v, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) + other
            return NotImplemented
        return normalize(GaussianRational(self.re + o.re, self.im + o.im))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) - other
            return NotImplemented
        return normalize(GaussianRational(self.re - o.re, self.im - o.im))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) * other
            return NotImplemented
        return normalize(GaussianRational(self.re * o.re - self.im * o.im,
                                          self.re * o.im + self.im * o.re))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) / other
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero")
        return normalize(GaussianRational((self.re * o.re + self.im * o.im) / den,
                                          (self.im * o.re - self.re * o.im) / den))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __abs__(self):
        return math.hypot(self.re, self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, (float, complex)):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def normalize(v):
    """Canonical form of an exact scalar (real parts collapse to Fraction/int)."""
    if isinstance(v, GaussianRational) and v.im == 0:
        v = v.re
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v.numerator)
    return v


def is_exact(v) -> bool:
    return isinstance(v, (int, Fraction, GaussianRational)) and not isinstance(v, bool)


def is_scalar(v) -> bool:
    return isinstance(v, (Number, GaussianRational)) and not isinstance(v, bool)


def to_exact(v):
    """Exact image of a scalar; floats are converted via their binary value."""
    if is_exact(v):
        return normalize(v)
    if isinstance(v, complex):
        return normalize(GaussianRational(Fraction(v.real), Fraction(v.imag)))
    return normalize(Fraction(v))


def to_float(v):
    if isinstance(v, GaussianRational):
        return complex(v)
    if isinstance(v, complex):
        return v
    return float(v)


def real_part(v):
    if isinstance(v, (GaussianRational, complex)):
        return v.real
    return v


def imag_part(v):
    if isinstance(v, (GaussianRational, complex)):
        return v.imag
    return 0


def magnitude(v):
    """``|v|``, exact for real exact scalars."""
    if isinstance(v, (int, Fraction)):
        return abs(Fraction(v))
    return abs(v)


def parse_scalar(text, exact: bool = True):
    """Parse decimal or ``p/q`` text (or a number) into a carrier scalar."""
    if isinstance(text, (int, float, Fraction)) and not isinstance(text, bool):
        return to_exact(text) if exact else float(text)
    if not isinstance(text, str):
        raise TypeError(f"cannot parse scalar from {type(text).__name__}")
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc
    return normalize(q) if exact else float(q)


def format_scalar(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    return repr(float(v))


def make_complex(re, im, exact: bool = True):
    if exact:
        return normalize(GaussianRational(re, im)) if im else normalize(Fraction(re))
    return complex(float(re), float(im)) if im else float(re)
