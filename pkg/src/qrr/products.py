"""q-Pochhammer symbols, eta quotients, theta series and the cubic continued fraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from qrr.coeffring import ONE, EisensteinRational, as_er, format_er
from qrr.series import QSeries

__all__ = [
    "MonomialArg",
    "PochFactor",
    "EtaQuotient",
    "ProductFactor",
    "ProductSide",
    "DivergentProductError",
    "mono",
    "poch_expand",
    "poch_apply",
    "eta_expand",
    "theta_jtp",
    "theta_product",
    "cubic_cf",
    "cubic_cf_depth",
]


class DivergentProductError(ValueError):
    """An infinite product whose factors do not tend to 1 q-adically."""


@dataclass(frozen=True)
class MonomialArg:
    """The monomial ``coeff * q^exp``."""

    coeff: EisensteinRational
    exp: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_er(self.coeff))
        object.__setattr__(self, "exp", Fraction(self.exp))
        if self.coeff.is_zero():
            raise ValueError("monomial coefficient must be nonzero")

    def __mul__(self, other):
        if isinstance(other, MonomialArg):
            return MonomialArg(self.coeff * other.coeff, self.exp + other.exp)
        return MonomialArg(self.coeff * as_er(other), self.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MonomialArg):
            return MonomialArg(self.coeff / other.coeff, self.exp - other.exp)
        return MonomialArg(self.coeff / as_er(other), self.exp)

    def __neg__(self):
        return MonomialArg(-self.coeff, self.exp)

    def __pow__(self, k: int):
        return MonomialArg(self.coeff ** k, self.exp * k)

    def series(self, order) -> QSeries:
        return QSeries.monomial(self.coeff, self.exp, order)

    def __str__(self):
        c = format_er(self.coeff)
        if self.exp == 0:
            return c
        q = "q" if self.exp == 1 else f"q^({self.exp})"
        if c == "1":
            return q
        if c == "-1":
            return "-" + q
        return f"({c})*{q}"


def mono(coeff=1, exp=0) -> MonomialArg:
    return MonomialArg(as_er(coeff), Fraction(exp))


@dataclass(frozen=True)
class PochFactor:
    """``(arg; q^step)_length``; ``length=None`` is the infinite product."""

    arg: MonomialArg
    step: Fraction
    length: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))
        if self.length is not None and self.length < 0:
            raise ValueError("Pochhammer length must be nonnegative")

    def factor_exps(self):
        """Yield the exponents ``exp + k*step`` of the individual factors."""
        k = 0
        while self.length is None or k < self.length:
            yield self.arg.exp + k * self.step
            k += 1

    def negative_part(self) -> Fraction:
        """Sum of the factor exponents that are negative (a finite sum)."""
        total = Fraction(0)
        if self.step <= 0:
            if self.length is None:
                raise DivergentProductError("infinite product needs a positive step")
            return sum((min(e, 0) for e in self.factor_exps()), Fraction(0))
        for e in self.factor_exps():
            if e >= 0:
                break
            total += e
        return total


def poch_apply(seed: QSeries, p: PochFactor, power: int = 1) -> QSeries:
    """Multiply ``seed`` by ``p**power`` (``power`` may be negative).

    Factors whose exponent is at or beyond the relative precision of the
    running product are skipped; they are 1 modulo the truncation.
    """
    if power == 0:
        return seed
    if p.length is None and p.step <= 0:
        raise DivergentProductError("infinite product needs a positive step")
    c = p.arg.coeff
    out = seed
    k = 0
    while p.length is None or k < p.length:
        e = p.arg.exp + k * p.step
        if out.is_zero():
            break
        if p.step > 0 and e >= out.order - out.valuation:
            break
        if power > 0:
            for _ in range(power):
                out = out.mul_binomial(c, e)
        else:
            for _ in range(-power):
                out = out.div_binomial(c, e)
        k += 1
    return out


def poch_expand(p: PochFactor, order) -> QSeries:
    """``(c q^r; q^s)_n`` as a series correct below ``order``."""
    if p.length is None and p.step <= 0:
        raise DivergentProductError("infinite product needs a positive step")
    extra = -p.negative_part()
    return poch_apply(QSeries.one(Fraction(order) + extra), p, 1).truncate(order)


@dataclass(frozen=True)
class EtaQuotient:
    """``prod f_m^r`` with ``f_m = (q^m; q^m)_inf``; stored merged and sorted."""

    parts: tuple

    def __post_init__(self):
        merged = {}
        for m, r in self.parts:
            if m <= 0:
                raise ValueError("eta factor index must be positive")
            merged[m] = merged.get(m, 0) + r
        object.__setattr__(self, "parts", tuple(sorted((m, r) for m, r in merged.items() if r)))


def eta_expand(e: EtaQuotient, order) -> QSeries:
    out = QSeries.one(order)
    for m, r in e.parts:
        out = poch_apply(out, PochFactor(mono(1, m), m), r)
    return out


@dataclass(frozen=True)
class ProductFactor:
    """``(coeff q^a; q^m)_inf ^ r``."""

    a: Fraction
    m: Fraction
    r: int
    coeff: EisensteinRational = ONE

    def poch(self) -> PochFactor:
        return PochFactor(MonomialArg(self.coeff, Fraction(self.a)), Fraction(self.m))


@dataclass(frozen=True)
class ProductSide:
    """``prefactor * prod (coeff q^a; q^m)_inf^r``."""

    factors: tuple
    prefactor: MonomialArg = MonomialArg(ONE, Fraction(0))

    def evaluate(self, order) -> QSeries:
        order = Fraction(order)
        extra = sum((-f.poch().negative_part() * f.r for f in self.factors if f.r > 0), Fraction(0))
        start = order - self.prefactor.exp + extra
        out = QSeries.one(start)
        for f in self.factors:
            out = poch_apply(out, f.poch(), f.r)
        out = out.scale_by(self.prefactor.coeff).shift(self.prefactor.exp)
        return out.truncate(order)


def theta_jtp(x: MonomialArg, step, order) -> QSeries:
    """``sum_n (-1)^n q^(step*n(n-1)/2) x^n`` over all integers n.

    Equals ``(q^step, x, q^step/x; q^step)_inf``; requires ``0 < exp(x) < step``.
    """
    s = Fraction(step)
    a = x.exp
    if not (0 < a < s):
        raise ValueError("theta_jtp needs 0 < exp(x) < step")
    order = Fraction(order)
    terms = {}
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            e = s * n * (n - 1) / 2 + a * n
            if e >= order:
                break
            c = x.coeff ** n
            if n % 2:
                c = -c
            terms[e] = terms.get(e, 0) + c
            n += direction
    return QSeries.from_dict(terms, order)


def theta_product(x: MonomialArg, step, order) -> QSeries:
    """Product form ``(q^step, x, q^step/x; q^step)_inf`` of :func:`theta_jtp`."""
    s = Fraction(step)
    side = ProductSide((
        ProductFactor(s, s, 1),
        ProductFactor(x.exp, s, 1, x.coeff),
        ProductFactor(s - x.exp, s, 1, x.coeff.inverse()),
    ))
    return side.evaluate(order)


def cubic_cf_depth(order) -> int:
    """Depth at which the cubic continued fraction is exact below ``order``.

    Convergents of depth d and d+1 first differ at q^((d+1)(d+2)/2 + 1/3);
    the returned depth keeps that exponent at or above ``order``.
    """
    d = 0
    while (d + 1) * (d + 2) // 2 < order:
        d += 1
    return d


def cubic_cf(depth: Optional[int], order) -> QSeries:
    """Depth-``depth`` convergent of q^(1/3)/(1 + (q+q^2)/(1 + (q^2+q^4)/(1 + ...))).

    Evaluated bottom-up with tail 1; ``depth=None`` picks :func:`cubic_cf_depth`.
    """
    order = Fraction(order)
    if depth is None:
        depth = cubic_cf_depth(order)
    t = QSeries.one(order)
    for k in range(depth, 0, -1):
        num = QSeries.from_dict({k: 1, 2 * k: 1}, order)
        t = num / t + 1
    return (t.inverse().shift(Fraction(1, 3))).truncate(order)
