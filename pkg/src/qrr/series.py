"""Truncated Laurent series in q^(1/D) over Q(w).

A :class:`QSeries` stores scaled integer exponents ``e`` (meaning ``q^(e/D)``)
densely on ``[min_exp, trunc)``. Coefficients are kept as integer lists
``re``/``om`` over a shared positive denominator ``den``, so the coefficient
of ``q^((min_exp+k)/D)`` is ``(re[k] + om[k]*w) / den``. ``om`` is ``None``
for series with rational coefficients.

Every constructor normalises: leading zeros are stripped (``min_exp`` is the
true valuation unless the series is zero to its truncation), the common
factor of ``den`` and all numerators is removed, and ``D`` is reduced by the
gcd of all nonzero exponents, ``min_exp`` and ``trunc``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from qrr import kernels
from qrr.coeffring import ONE, ZERO, EisensteinRational, as_er, format_er, omega_pow

__all__ = [
    "QSeries",
    "NonInvertibleError",
    "FractionalExponentError",
    "qs_add",
    "qs_mul",
    "qs_inv",
    "qs_subst_power",
    "qs_subst_unit_root",
    "qs_extract_arithmetic",
]


class NonInvertibleError(ArithmeticError):
    """Raised when inverting a series that is zero to its truncation."""


class FractionalExponentError(ValueError):
    """Raised when an operation needs integer exponents but finds q^(a/b)."""


def _er_parts(c: EisensteinRational):
    """Split ``c`` into integers ``(u0, u1, v)`` with ``c == (u0 + u1 w)/v``."""
    v = lcm(c.re.denominator, c.om.denominator)
    return c.re.numerator * (v // c.re.denominator), c.om.numerator * (v // c.om.denominator), v


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QSeries:
    __slots__ = ("scale", "min_exp", "trunc", "re", "om", "den")

    def __init__(self, scale, min_exp, trunc, re, om=None, den=1):
        if scale <= 0:
            raise ValueError("scale must be positive")
        if trunc < min_exp:
            raise ValueError("trunc must be >= min_exp")
        if len(re) != trunc - min_exp or (om is not None and len(om) != len(re)):
            raise ValueError("coefficient storage does not match [min_exp, trunc)")
        if den <= 0:
            raise ValueError("den must be positive")
        self.scale = scale
        self.min_exp = min_exp
        self.trunc = trunc
        self.re = re
        self.om = om
        self.den = den
        self._normalize()

    # -- construction -------------------------------------------------------

    def _normalize(self):
        re, om = self.re, self.om
        if om is not None and not any(om):
            om = None
        # strip leading zeros
        k = 0
        n = len(re)
        if om is None:
            while k < n and re[k] == 0:
                k += 1
        else:
            while k < n and re[k] == 0 and om[k] == 0:
                k += 1
        if k:
            re = re[k:]
            if om is not None:
                om = om[k:]
            self.min_exp += k
        if not re:
            om = None
            self.den = 1
        elif self.den != 1:
            g = gcd(self.den, *re) if om is None else gcd(self.den, *re, *om)
            if g > 1:
                re = [x // g for x in re]
                if om is not None:
                    om = [x // g for x in om]
                self.den //= g
        self.re, self.om = re, om
        if self.scale > 1:
            self._reduce_scale()

    def _reduce_scale(self):
        g = gcd(self.scale, self.min_exp, self.trunc)
        if g == 1:
            return
        re, om = self.re, self.om
        for k in range(len(re)):
            if re[k] or (om is not None and om[k]):
                g = gcd(g, k)
                if g == 1:
                    return
        self.re = re[::g]
        if om is not None:
            self.om = om[::g]
        self.scale //= g
        self.min_exp //= g
        self.trunc //= g

    @classmethod
    def _scaled_order(cls, order, scale):
        """Return ``(scale', trunc)`` so that ``trunc/scale' == order``."""
        order = _as_fraction(order)
        s = lcm(scale, order.denominator)
        return s, order.numerator * (s // order.denominator)

    @classmethod
    def zero(cls, order, scale=1) -> "QSeries":
        scale, t = cls._scaled_order(order, scale)
        return cls(scale, t, t, [], None, 1)

    @classmethod
    def monomial(cls, coeff, exp, order) -> "QSeries":
        """``coeff * q^exp`` known below ``order``."""
        c = as_er(coeff)
        exp = _as_fraction(exp)
        order = _as_fraction(order)
        scale = lcm(exp.denominator, order.denominator)
        e = exp.numerator * (scale // exp.denominator)
        t = order.numerator * (scale // order.denominator)
        if c.is_zero() or e >= t:
            return cls(scale, t, t, [], None, 1)
        u0, u1, v = _er_parts(c)
        n = t - e
        re = [u0] + [0] * (n - 1)
        om = [u1] + [0] * (n - 1) if u1 else None
        return cls(scale, e, t, re, om, v)

    @classmethod
    def one(cls, order) -> "QSeries":
        return cls.monomial(1, 0, order)

    @classmethod
    def const(cls, c, order) -> "QSeries":
        return cls.monomial(c, 0, order)

    @classmethod
    def from_coeffs(cls, coeffs, order, *, scale=1, min_exp=0) -> "QSeries":
        """Build from a list of coefficients starting at scaled ``min_exp``.

        ``order`` is in units of q. Entries past the truncation are ignored and
        missing ones are zero.
        """
        scale0 = scale
        scale, t = cls._scaled_order(order, scale)
        stretch = scale // scale0
        min_exp *= stretch
        cs = [as_er(c) for c in coeffs]
        v = 1
        for c in cs:
            v = lcm(v, c.re.denominator, c.om.denominator)
        n = max(t - min_exp, 0)
        re = [0] * n
        om = [0] * n
        for k, c in enumerate(cs):
            idx = k * stretch
            if idx >= n:
                break
            re[idx] = c.re.numerator * (v // c.re.denominator)
            om[idx] = c.om.numerator * (v // c.om.denominator)
        return cls(scale, min_exp if n else t, t, re, om, v)

    @classmethod
    def from_dict(cls, terms, order) -> "QSeries":
        """Build from ``{exponent: coefficient}`` with rational exponents."""
        order = _as_fraction(order)
        exps = {_as_fraction(e): as_er(c) for e, c in terms.items()}
        scale = order.denominator
        for e in exps:
            scale = lcm(scale, e.denominator)
        t = order.numerator * (scale // order.denominator)
        live = {e: c for e, c in exps.items() if e < order and not c.is_zero()}
        if not live:
            return cls(scale, t, t, [], None, 1)
        lo = min(live)
        m = lo.numerator * (scale // lo.denominator)
        coeffs = [ZERO] * (t - m)
        for e, c in live.items():
            coeffs[e.numerator * (scale // e.denominator) - m] = c
        return cls.from_coeffs(coeffs, order, scale=scale, min_exp=m)

    # -- basic views ----------------------------------------------------------

    @property
    def order(self) -> Fraction:
        """Truncation in units of q: the series is exact for exponents below."""
        return Fraction(self.trunc, self.scale)

    @property
    def valuation(self) -> Fraction:
        return Fraction(self.min_exp, self.scale)

    def is_rational(self) -> bool:
        return self.om is None

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.re

    def coeff(self, exp) -> EisensteinRational:
        exp = _as_fraction(exp)
        if exp >= self.order:
            raise IndexError(f"exponent {exp} is at or beyond the truncation {self.order}")
        scaled = exp * self.scale
        if scaled.denominator != 1:
            return ZERO
        k = scaled.numerator - self.min_exp
        if k < 0:
            return ZERO
        om = self.om[k] if self.om is not None else 0
        return EisensteinRational(Fraction(self.re[k], self.den), Fraction(om, self.den))

    __getitem__ = coeff

    def terms(self):
        """Yield ``(exponent, coefficient)`` for the nonzero known terms."""
        for k, x in enumerate(self.re):
            y = self.om[k] if self.om is not None else 0
            if x or y:
                yield (Fraction(self.min_exp + k, self.scale),
                       EisensteinRational(Fraction(x, self.den), Fraction(y, self.den)))

    def integer_coeffs(self, order=None):
        """Coefficients of q^0..q^(N-1) as Fractions; rational, integral exponents."""
        if self.om is not None:
            raise ValueError("series has non-rational coefficients")
        n = int(self.order if order is None else min(_as_fraction(order), self.order))
        out = []
        for e in range(n):
            c = self.coeff(e)
            out.append(c.re)
        return out

    # -- alignment helpers -----------------------------------------------------

    def _stretched(self, k):
        """Storage at scale ``self.scale * k``: (min_exp, trunc, re, om)."""
        if k == 1:
            return self.min_exp, self.trunc, self.re, self.om
        n = len(self.re)
        re = [0] * ((n - 1) * k + 1) if n else []
        re[::k] = self.re
        om = None
        if self.om is not None:
            om = [0] * len(re)
            om[::k] = self.om
        t = self.trunc * k
        m = self.min_exp * k
        # pad up to the new truncation
        pad = t - m - len(re) if n else 0
        if n:
            re.extend([0] * pad)
            if om is not None:
                om.extend([0] * pad)
        else:
            m = t
        return m, t, re, om

    def _common(self, other):
        s = lcm(self.scale, other.scale)
        return s, self._stretched(s // self.scale), other._stretched(s // other.scale)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            try:
                other = QSeries.const(other, self.order)
            except TypeError:
                return NotImplemented
        s, (ma, ta, ra, oa), (mb, tb, rb, ob) = self._common(other)
        t = min(ta, tb)
        m = min(ma, mb, t)
        n = t - m
        L = lcm(self.den, other.den)
        fa, fb = L // self.den, L // other.den
        re = [0] * n
        om = [0] * n if (oa is not None or ob is not None) else None
        for (mm, rr, oo, f) in ((ma, ra, oa, fa), (mb, rb, ob, fb)):
            off = mm - m
            lim = min(len(rr), n - off)
            if lim <= 0:
                continue
            if f == 1:
                for k in range(lim):
                    re[off + k] += rr[k]
            else:
                for k in range(lim):
                    re[off + k] += f * rr[k]
            if oo is not None:
                for k in range(lim):
                    om[off + k] += f * oo[k]
        return QSeries(s, m, t, re, om, L)

    __radd__ = __add__

    def __neg__(self):
        om = [-x for x in self.om] if self.om is not None else None
        return QSeries(self.scale, self.min_exp, self.trunc, [-x for x in self.re], om, self.den)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            try:
                other = QSeries.const(other, self.order)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale_by(self, c) -> "QSeries":
        """Multiply by the scalar ``c`` in Q(w)."""
        c = as_er(c)
        if c.is_zero():
            return QSeries(self.scale, self.trunc, self.trunc, [], None, 1)
        u0, u1, v = _er_parts(c)
        A, B = self.re, self.om
        if u1 == 0:
            re = [u0 * x for x in A]
            om = [u0 * x for x in B] if B is not None else None
        elif B is None:
            re = [u0 * x for x in A]
            om = [u1 * x for x in A]
        else:
            re = [u0 * a - u1 * b for a, b in zip(A, B)]
            om = [u0 * b + u1 * a - u1 * b for a, b in zip(A, B)]
        return QSeries(self.scale, self.min_exp, self.trunc, re, om, self.den * v)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            try:
                return self.scale_by(other)
            except TypeError:
                return NotImplemented
        s, (ma, ta, ra, oa), (mb, tb, rb, ob) = self._common(other)
        t = min(ta + mb, tb + ma)
        m = ma + mb
        if t <= m:
            return QSeries(s, t, t, [], None, 1)
        n = t - m
        conv = kernels.conv
        if oa is None and ob is None:
            re, om = conv(ra, rb, n), None
        elif oa is None:
            re, om = conv(ra, rb, n), conv(ra, ob, n)
        elif ob is None:
            re, om = conv(ra, rb, n), conv(oa, rb, n)
        else:
            ac = conv(ra, rb, n)
            bd = conv(oa, ob, n)
            mixed = conv([x + y for x, y in zip(ra, oa)], [x + y for x, y in zip(rb, ob)], n)
            re = [x - y for x, y in zip(ac, bd)]
            om = [z - x - 2 * y for x, y, z in zip(ac, bd, mixed)]
        return QSeries(s, m, t, re, om, self.den * other.den)

    __rmul__ = __mul__

    def sigma(self) -> "QSeries":
        """Apply the Galois conjugation w -> w^2 to every coefficient."""
        if self.om is None:
            return self
        re = [a - b for a, b in zip(self.re, self.om)]
        om = [-b for b in self.om]
        return QSeries(self.scale, self.min_exp, self.trunc, re, om, self.den)

    def inverse(self) -> "QSeries":
        if not self.re:
            raise NonInvertibleError("series is zero to its truncation order")
        n = self.trunc - self.min_exp
        if self.om is None:
            c, d = kernels.inv(self.re, n)
            re = [x * self.den for x in c] if self.den != 1 else c
            return QSeries(self.scale, -self.min_exp, n - self.min_exp, re, None, d)
        # 1/P = sigma(P) / (P * sigma(P)); the norm series has rational coefficients
        X, Y = self.re, self.om
        conv = kernels.conv
        xx, xy, yy = conv(X, X, n), conv(X, Y, n), conv(Y, Y, n)
        norm = [a - b + c for a, b, c in zip(xx, xy, yy)]
        if norm[0] == 0:
            raise NonInvertibleError("leading coefficient has zero norm")
        c, d = kernels.inv(norm, n)
        sig_re = [a - b for a, b in zip(X, Y)]
        sig_om = [-b for b in Y]
        re = conv(sig_re, c, n)
        om = conv(sig_om, c, n)
        if self.den != 1:
            re = [x * self.den for x in re]
            om = [x * self.den for x in om]
        return QSeries(self.scale, -self.min_exp, n - self.min_exp, re, om, d)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        try:
            return self.scale_by(as_er(other).inverse())
        except TypeError:
            return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return QSeries.one(self.order - self.valuation if self.re else self.order)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    # -- exact binomial factors ----------------------------------------------

    def mul_binomial(self, c, exp) -> "QSeries":
        """Multiply by the exact polynomial ``1 - c q^exp``."""
        c = as_er(c)
        exp = _as_fraction(exp)
        if c.is_zero():
            return self
        if exp > 0 and c.om == 0 and c.re.denominator == 1:
            s = lcm(self.scale, exp.denominator)
            e = exp.numerator * (s // exp.denominator)
            m, t, re, om = self._stretched(s // self.scale)
            u = c.re.numerator
            re = kernels.mul_binom(re, u, e)
            if om is not None:
                om = kernels.mul_binom(om, u, e)
            return QSeries(s, m, t, re, om, self.den)
        return self - self.scale_by(c).shift(exp)

    def div_binomial(self, c, exp) -> "QSeries":
        """Divide by ``1 - c q^exp``."""
        c = as_er(c)
        exp = _as_fraction(exp)
        if c.is_zero():
            return self
        if exp == 0:
            if c == ONE:
                raise NonInvertibleError("division by the zero factor (1 - q^0)")
            return self.scale_by((ONE - c).inverse())
        if exp < 0:
            # 1/(1 - c q^e) = -c^-1 q^-e / (1 - c^-1 q^-e)
            ci = c.inverse()
            return self.scale_by(-ci).shift(-exp).div_binomial(ci, -exp)
        s = lcm(self.scale, exp.denominator)
        e = exp.numerator * (s // exp.denominator)
        m, t, re, om = self._stretched(s // self.scale)
        u0, u1, v = _er_parts(c)
        if u1 == 0 and v == 1:
            re = kernels.div_binom(re, u0, e)
            if om is not None:
                om = kernels.div_binom(om, u0, e)
            return QSeries(s, m, t, re, om, self.den)
        if v != 1:
            binom = QSeries.one(self.order - self.valuation + 1).mul_binomial(c, exp)
            return self * binom.inverse()
        # Eisenstein integer c: out_k = p_k + c * out_{k-e}
        n = len(re)
        A = list(re)
        B = list(om) if om is not None else [0] * n
        for k in range(e, n):
            a, b = A[k - e], B[k - e]
            A[k] += u0 * a - u1 * b
            B[k] += u0 * b + u1 * a - u1 * b
        return QSeries(s, m, t, A, B, self.den)

    def shift(self, exp) -> "QSeries":
        """Multiply by the exact monomial ``q^exp``."""
        exp = _as_fraction(exp)
        s = lcm(self.scale, exp.denominator)
        e = exp.numerator * (s // exp.denominator)
        m, t, re, om = self._stretched(s // self.scale)
        return QSeries(s, m + e, t + e, list(re), list(om) if om is not None else None, self.den)

    # -- substitutions -------------------------------------------------------

    def subst_power(self, m) -> "QSeries":
        """The series in ``q^m`` for a positive rational ``m``."""
        m = _as_fraction(m)
        if m <= 0:
            raise ValueError("substitution power must be positive")
        p, r = m.numerator, m.denominator
        s = self.scale * r
        n = len(self.re)
        if n == 0:
            return QSeries(s, self.trunc * p, self.trunc * p, [], None, 1)
        size = (n - 1) * p + 1
        re = [0] * size
        re[::p] = self.re
        om = None
        if self.om is not None:
            om = [0] * size
            om[::p] = self.om
        t = self.trunc * p
        mn = self.min_exp * p
        pad = t - mn - size
        re.extend([0] * pad)
        if om is not None:
            om.extend([0] * pad)
        return QSeries(s, mn, t, re, om, self.den)

    def _integral_check(self):
        D = self.scale
        if D == 1:
            return
        for k, x in enumerate(self.re):
            if (x or (self.om is not None and self.om[k])) and (self.min_exp + k) % D:
                raise FractionalExponentError(
                    f"fractional exponent {Fraction(self.min_exp + k, D)} present")

    def subst_unit_root(self, j: int) -> "QSeries":
        """Replace q by ``w^j q``: the coefficient of q^n gains ``w^(j n)``."""
        self._integral_check()
        j %= 3
        if j == 0:
            return self
        D = self.scale
        n = len(self.re)
        A = self.re
        B = self.om if self.om is not None else [0] * n
        re = [0] * n
        om = [0] * n
        for k in range(n):
            a, b = A[k], B[k]
            if not (a or b):
                continue
            e = (self.min_exp + k) // D
            r = (j * e) % 3
            if r == 0:
                re[k], om[k] = a, b
            elif r == 1:
                # (a + b w) w = -b + (a - b) w
                re[k], om[k] = -b, a - b
            else:
                # (a + b w) w^2 = (b - a) - a w
                re[k], om[k] = b - a, -a
        return QSeries(D, self.min_exp, self.trunc, re, om, self.den)

    def extract(self, residue: int, modulus: int) -> "QSeries":
        """Keep exactly the terms q^n with ``n = residue (mod modulus)``."""
        self._integral_check()
        D = self.scale
        re = list(self.re)
        om = list(self.om) if self.om is not None else None
        for k in range(len(re)):
            e, rem = divmod(self.min_exp + k, D)
            if rem or (e - residue) % modulus:
                re[k] = 0
                if om is not None:
                    om[k] = 0
        return QSeries(D, self.min_exp, self.trunc, re, om, self.den)

    def truncate(self, order) -> "QSeries":
        """Forget every coefficient at or beyond ``order`` (in units of q)."""
        order = _as_fraction(order)
        if order >= self.order:
            return self
        s, t = QSeries._scaled_order(order, self.scale)
        m, _, re, om = self._stretched(s // self.scale)
        n = max(t - m, 0)
        if n == 0:
            return QSeries(s, t, t, [], None, 1)
        return QSeries(s, m, t, re[:n], om[:n] if om is not None else None, self.den)

    # -- comparison ------------------------------------------------------------

    def first_mismatch(self, other: "QSeries"):
        """First exponent below the common truncation where the two differ.

        Returns ``None`` when they agree, else ``(exponent, mine, theirs)``.
        """
        s, (ma, ta, ra, oa), (mb, tb, rb, ob) = self._common(other)
        t = min(ta, tb)
        for e in range(min(ma, mb), t):
            ka, kb = e - ma, e - mb
            a0 = ra[ka] if 0 <= ka < len(ra) else 0
            a1 = oa[ka] if oa is not None and 0 <= ka < len(ra) else 0
            b0 = rb[kb] if 0 <= kb < len(rb) else 0
            b1 = ob[kb] if ob is not None and 0 <= kb < len(rb) else 0
            if a0 * other.den != b0 * self.den or a1 * other.den != b1 * self.den:
                x = Fraction(e, s)
                return x, self.coeff(x), other.coeff(x)
        return None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    # -- rendering -------------------------------------------------------------

    def __str__(self):
        body = ""
        for e, c in self.terms():
            term = _render_term(e, c)
            if not body:
                body = term
            elif term.startswith("-"):
                body += " - " + term[1:]
            else:
                body += " + " + term
        if not body:
            return f"O(q^{_render_exp(self.order)})"
        return f"{body} + O(q^{_render_exp(self.order)})"

    def __repr__(self):
        return f"QSeries({self})"


def _render_exp(e: Fraction) -> str:
    return str(e) if e.denominator == 1 and e >= 0 else f"({e})"


def _render_term(e: Fraction, c: EisensteinRational) -> str:
    cs = format_er(c)
    if e == 0:
        return cs
    if not c.is_rational():
        cs = f"({cs})"
    mono = "q" if e == 1 else f"q^{_render_exp(e)}"
    if cs == "1":
        return mono
    if cs == "-1":
        return f"-{mono}"
    return f"{cs}*{mono}"


# functional aliases ------------------------------------------------------------

def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_inv(a: QSeries) -> QSeries:
    return a.inverse()


def qs_subst_power(a: QSeries, m) -> QSeries:
    return a.subst_power(m)


def qs_subst_unit_root(a: QSeries, j: int) -> QSeries:
    return a.subst_unit_root(j)


def qs_extract_arithmetic(a: QSeries, residue: int, modulus: int) -> QSeries:
    return a.extract(residue, modulus)


def omega_twist_coeff(j: int) -> EisensteinRational:
    return omega_pow(j)
