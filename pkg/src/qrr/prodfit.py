"""Recover ``f = prod_n (1 - q^n)^(-e_n)`` from the coefficients of ``f``.

The logarithmic derivative ``q f'/f = sum_k s_k q^k`` has
``s_k = sum_{d | k} d e_d``, so the ``e_n`` follow by Moebius-style peeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from qrr.products import PochFactor, mono, poch_apply
from qrr.series import QSeries

__all__ = [
    "ProductExponents",
    "NonIntegralExponentError",
    "NotPeriodicError",
    "prodfit",
    "classify",
    "period_candidates",
    "expand_exponents",
]


class NonIntegralExponentError(ValueError):
    """Raised in strict mode; ``.result`` holds the fitted exponents anyway."""

    def __init__(self, n, result):
        super().__init__(f"fractional exponent at n={n}: {result.e[n - 1]}")
        self.n = n
        self.result = result


class NotPeriodicError(ValueError):
    pass


@dataclass(frozen=True)
class ProductExponents:
    e: tuple  # e[n-1] is the exponent of (1 - q^n)^(-1)

    @property
    def N(self) -> int:
        return len(self.e)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for x in self.e)

    def first_fractional(self):
        for n, x in enumerate(self.e, 1):
            if x.denominator != 1:
                return n
        return None

    def __add__(self, other: "ProductExponents") -> "ProductExponents":
        n = min(self.N, other.N)
        return ProductExponents(tuple(a + b for a, b in zip(self.e[:n], other.e[:n])))

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "exponents": [int(x) if x.denominator == 1 else str(x) for x in self.e],
            "integral": self.integral,
            "period_candidates": period_candidates(self),
        }


def prodfit(f: QSeries, N: int, *, strict: bool = False) -> ProductExponents:
    """Exponents ``e_1..e_N`` with ``prod (1-q^n)^(-e_n) == f`` modulo ``q^(N+1)``."""
    if N < 1:
        raise ValueError("N must be positive")
    if f.order <= N:
        raise ValueError(f"series is known below q^{f.order}, need order > {N}")
    if not f.is_rational():
        raise ValueError("prodfit needs rational coefficients")
    if f.scale != 1:
        raise ValueError("prodfit needs integer exponents")
    if f.valuation != 0 or f.coeff(0) != 1:
        raise ValueError("prodfit needs constant term 1")
    c = [Fraction(f.coeff(n).re) for n in range(N + 1)]
    qdf = QSeries.from_coeffs([n * c[n] for n in range(N + 1)], N + 1)
    s = (qdf / QSeries.from_coeffs(c, N + 1)).truncate(N + 1)
    sk = [Fraction(s.coeff(k).re) for k in range(N + 1)]
    e = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        acc = sk[n]
        for d in range(1, n // 2 + 1):
            if n % d == 0:
                acc -= d * e[d]
        e[n] = acc / n
    out = ProductExponents(tuple(e[1:]))
    bad = out.first_fractional()
    if strict and bad is not None:
        raise NonIntegralExponentError(bad, out)
    return out


def expand_exponents(pe: ProductExponents, order=None) -> QSeries:
    """Re-expand ``prod_{n <= N} (1 - q^n)^(-e_n)``; exponents must be integers."""
    if not pe.integral:
        raise ValueError("cannot expand fractional exponents")
    order = pe.N + 1 if order is None else order
    out = QSeries.one(order)
    for n, x in enumerate(pe.e, 1):
        if x:
            out = poch_apply(out, PochFactor(mono(1, n), n, 1), -int(x))
    return out


def _is_periodic(e, m) -> bool:
    return all(e[i] == e[i % m] for i in range(len(e)))


def period_candidates(pe: ProductExponents):
    """Moduli ``m`` with ``2m <= N`` for which ``e`` is exactly periodic."""
    return [m for m in range(1, pe.N // 2 + 1) if _is_periodic(pe.e, m)]


def classify(pe: ProductExponents, m: int):
    """Present periodic exponents as ``[(a, m, r)]`` meaning ``prod (q^a; q^m)_inf^r``."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if pe.N < 2 * m:
        raise NotPeriodicError(f"need N >= {2 * m} to certify period {m}, have {pe.N}")
    if not _is_periodic(pe.e, m):
        raise NotPeriodicError(f"exponents are not periodic with modulus {m}")
    out = []
    for a in range(1, m + 1):
        r = -pe.e[a - 1]
        if r:
            out.append((a, m, int(r) if r.denominator == 1 else r))
    return out
