"""Exact arithmetic in Q and in Q(w), w a primitive cube root of unity.

Elements of Q(w) are stored in the basis {1, w}; w^2 is always rewritten as
-1 - w, so two elements are equal exactly when both components agree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "EisensteinRational",
    "ZERO",
    "ONE",
    "OMEGA",
    "er_mul",
    "er_inv",
    "omega_pow",
    "as_er",
    "parse_er",
]


class EisensteinRational:
    """The number ``re + om*w`` with rational components."""

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "om", Fraction(om))

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinRational is immutable")

    def __reduce__(self):
        return (EisensteinRational, (self.re, self.om))

    @classmethod
    def _raw(cls, re: Fraction, om: Fraction) -> "EisensteinRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "om", om)
        return obj

    def is_rational(self) -> bool:
        return self.om == 0

    def is_zero(self) -> bool:
        return self.re == 0 and self.om == 0

    def conjugate(self) -> "EisensteinRational":
        # a + b w  ->  a + b w^2 = (a - b) - b w
        return EisensteinRational._raw(self.re - self.om, -self.om)

    def norm(self) -> Fraction:
        a, b = self.re, self.om
        return a * a - a * b + b * b

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinRational._raw(self.re + other.re, self.om + other.om)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational._raw(-self.re, -self.om)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return EisensteinRational._raw(self.re - other.re, self.om - other.om)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.om, other.re, other.om
        bd = b * d
        return EisensteinRational._raw(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def inverse(self) -> "EisensteinRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return EisensteinRational._raw(c.re / n, c.om / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.om == other.om

    def __hash__(self):
        if self.om == 0:
            return hash(self.re)
        return hash((self.re, self.om))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"EisensteinRational({self})"

    def __str__(self):
        return format_er(self)


def _coerce(x):
    if isinstance(x, EisensteinRational):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return EisensteinRational._raw(Fraction(x), Fraction(0))
    return NotImplemented


ZERO = EisensteinRational(0, 0)
ONE = EisensteinRational(1, 0)
OMEGA = EisensteinRational(0, 1)
_OMEGA_POWERS = (ONE, OMEGA, EisensteinRational(-1, -1))


def as_er(x) -> EisensteinRational:
    """Coerce an int, Fraction, string or ``[re, om]`` pair."""
    if isinstance(x, str):
        return parse_er(x)
    if isinstance(x, (list, tuple)):
        re_, om = x
        return EisensteinRational(Fraction(re_), Fraction(om))
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(w)")
    return y


def er_mul(x, y) -> EisensteinRational:
    return as_er(x) * as_er(y)


def er_inv(x) -> EisensteinRational:
    return as_er(x).inverse()


def omega_pow(j: int) -> EisensteinRational:
    return _OMEGA_POWERS[j % 3]


def format_er(x: EisensteinRational) -> str:
    """Render as ``a`` or ``a+b*w`` (``a`` always present when ``om != 0``)."""
    if x.om == 0:
        return str(x.re)
    sign = "-" if x.om < 0 else "+"
    return f"{x.re}{sign}{abs(x.om)}*w"


_TERM_RE = re.compile(r"([+-]?)([^+-]+)")


def parse_er(text: str) -> EisensteinRational:
    """Parse the ``a+b*w`` rendering (also ``w``, ``-w^2``, ``1/2-w``)."""
    compact = text.replace(" ", "")
    if not compact or _TERM_RE.sub("", compact):
        raise ValueError(f"not an Eisenstein rational: {text!r}")
    total = ZERO
    for sign, body in _TERM_RE.findall(compact):
        unit = ONE
        if body.endswith("w^2"):
            body, unit = body[:-3], omega_pow(2)
        elif body.endswith("w"):
            body, unit = body[:-1], OMEGA
        body = body.rstrip("*")
        try:
            c = Fraction(body) if body else Fraction(1)
        except ValueError:
            raise ValueError(f"not an Eisenstein rational: {text!r}") from None
        term = unit * c
        total = total - term if sign == "-" else total + term
    return total
