"""Contour integrals as formal constant terms, and the Gasper-Rahman residue sum.

An integrand is a product of :class:`ZFactor` objects. Each factor expands
into a finite Laurent polynomial in ``z`` whose coefficients are q-series
(finite because only terms below the truncation order are kept); the
integral is the ``z^0`` coefficient of the product.

:func:`gr_rhs` evaluates the closed residue-sum formula for

    oint (a_1 z, ..., a_A z, b_1/z, ..., b_B/z; p)_inf
         / (c_1 z, ..., c_C z, d_1/z, ..., d_D/z; p)_inf  dz/(2 pi i z)

at monomial parameters, giving an independent check on the constant-term
engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from qrr.coeffring import ONE, as_er
from qrr.products import MonomialArg, PochFactor, mono, poch_apply
from qrr.series import QSeries

__all__ = [
    "ZFactor",
    "ZLaurent",
    "GRSpec",
    "InfiniteZSupportError",
    "MissingThetaError",
    "PoleCollisionError",
    "FormalDivergenceError",
    "zfactor_expand",
    "ct_product",
    "sum_equals_ct",
    "gr_rhs",
    "gr_to_zfactors",
]

KINDS = ("EulerNum", "EulerDen", "Theta")


class InfiniteZSupportError(ValueError):
    pass


class MissingThetaError(ValueError):
    pass


class PoleCollisionError(ValueError):
    pass


class FormalDivergenceError(ValueError):
    pass


@dataclass(frozen=True)
class ZFactor:
    """``(arg z^zpow; q^step)_inf`` (EulerNum), its reciprocal (EulerDen),
    or the theta factor ``(q^step z, 1/z, q^step; q^step)_inf``."""

    kind: str
    arg: MonomialArg
    zpow: int = 1
    step: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "step", Fraction(self.step))
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.step <= 0 or self.zpow <= 0:
            raise ValueError("step and zpow must be positive")
        if self.kind == "EulerDen" and self.arg.exp <= 0:
            raise InfiniteZSupportError("EulerDen needs an argument of positive order")
        if self.kind == "Theta" and (self.zpow != 1 or self.arg != mono(1, self.step)):
            raise ValueError("Theta factor has arg q^step and zpow 1")

    @classmethod
    def theta(cls, step=1) -> "ZFactor":
        return cls("Theta", mono(1, step), 1, step)

    def min_valuation(self) -> Fraction:
        """Smallest q-valuation among the z-coefficients."""
        if self.kind != "EulerNum" or self.arg.exp >= 0:
            return Fraction(0)
        s, a = self.step, self.arg.exp
        best, v, i = Fraction(0), Fraction(0), 0
        # v(i) = s*C(i,2) + a*i is convex with increments a + s*i
        while a + s * i < 0:
            v += a + s * i
            best = min(best, v)
            i += 1
        return best

    def to_json(self) -> dict:
        from qrr.coeffring import format_er
        return {"kind": self.kind, "coeff": format_er(self.arg.coeff), "exp": str(self.arg.exp),
                "zpow": self.zpow, "step": str(self.step)}

    @classmethod
    def from_json(cls, d: dict) -> "ZFactor":
        step = Fraction(d.get("step", 1))
        if d["kind"] == "Theta":
            return cls.theta(step)
        arg = MonomialArg(as_er(str(d.get("coeff", "1"))), Fraction(d.get("exp", 0)))
        return cls(d["kind"], arg, int(d.get("zpow", 1)), step)


@dataclass
class ZLaurent:
    """Finite Laurent polynomial in ``z`` with q-series coefficients."""

    coeffs: Dict[int, QSeries]
    order: Fraction

    @property
    def support(self):
        if not self.coeffs:
            return (0, -1)
        return (min(self.coeffs), max(self.coeffs))

    @property
    def width(self) -> int:
        lo, hi = self.support
        return hi - lo + 1

    def __getitem__(self, k) -> QSeries:
        return self.coeffs.get(k, QSeries.zero(self.order))

    def constant_term(self) -> QSeries:
        return self[0]


def _inv_poch_prefixes(step, order):
    """Yield ``1/(q^step; q^step)_i`` for i = 0, 1, ... at the given order."""
    cur = QSeries.one(order)
    i = 0
    while True:
        yield cur
        i += 1
        cur = cur.div_binomial(1, step * i)


def zfactor_expand(f: ZFactor, order, *, widen: int = 0) -> ZLaurent:
    """Expand ``f`` as a Laurent polynomial in ``z``, coefficients correct below ``order``.

    ``widen`` keeps that many extra z-powers beyond the valuation cut-off on
    each side (used by the support audit).
    """
    order = Fraction(order)
    s = f.step
    out: Dict[int, QSeries] = {}
    if f.kind == "Theta":
        for direction in (1, -1):
            k = 0 if direction == 1 else -1
            extra = 0
            while True:
                e = s * k * (k - 1) / 2
                if e >= order:
                    if extra >= widen:
                        break
                    extra += 1
                out[-k] = QSeries.monomial(-1 if k % 2 else 1, e, order)
                k += direction
        return ZLaurent(out, order)
    c, a, m = f.arg.coeff, f.arg.exp, f.zpow
    num = f.kind == "EulerNum"
    extra = 0
    cpow = ONE
    for i, inv in enumerate(_inv_poch_prefixes(s, order)):
        e = a * i + (s * i * (i - 1) / 2 if num else 0)
        if e >= order:
            # past the vertex the valuations only grow
            if not num or a + s * i >= 0:
                if extra >= widen:
                    break
                extra += 1
        coeff = -cpow if (num and i % 2) else cpow
        out[m * i] = inv.scale_by(coeff).shift(e).truncate(order)
        cpow = cpow * c
    return ZLaurent(out, order)


def ct_product(factors, order, *, widen: int = 0) -> QSeries:
    """Constant term in ``z`` of the product of ``factors``, correct below ``order``."""
    order = Fraction(order)
    factors = list(factors)
    if not any(f.kind == "Theta" for f in factors):
        raise MissingThetaError("constant-term extraction needs a theta factor")
    mins = [f.min_valuation() for f in factors]
    slack = -sum(mins, Fraction(0))
    work = order + slack
    laurents = [zfactor_expand(f, work, widen=widen) for f in factors]
    pairs = sorted(zip(laurents, mins), key=lambda p: p[0].width)
    n = len(pairs)
    # z-range and valuation floor still reachable from the factors after position i
    rest_lo, rest_hi, rest_val = [0] * (n + 1), [0] * (n + 1), [Fraction(0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo, hi = pairs[i][0].support
        rest_lo[i] = rest_lo[i + 1] + lo
        rest_hi[i] = rest_hi[i + 1] + hi
        rest_val[i] = rest_val[i + 1] + pairs[i][1]
    cur = {k: v for k, v in pairs[0][0].coeffs.items() if -rest_hi[1] <= k <= -rest_lo[1]}
    for i in range(1, n):
        nxt = pairs[i][0].coeffs
        lo, hi = -rest_hi[i + 1], -rest_lo[i + 1]
        cut = order - rest_val[i + 1]
        acc: Dict[int, QSeries] = {}
        for k1, s1 in cur.items():
            if s1.is_zero():
                continue
            v1 = s1.valuation
            for k2, s2 in nxt.items():
                k = k1 + k2
                if k < lo or k > hi or s2.is_zero() or v1 + s2.valuation >= cut:
                    continue
                prod = (s1 * s2).truncate(cut)
                acc[k] = acc[k] + prod if k in acc else prod
        cur = acc
    res = cur.get(0)
    if res is None:
        return QSeries.zero(order)
    return res.truncate(order)


def sum_equals_ct(sumside, factors, order):
    """Compare a sum side with a constant term; returns ``(equal, first_mismatch)``."""
    from qrr.multisum import eval_sum_side
    lhs = eval_sum_side(sumside, order)
    rhs = ct_product(factors, order)
    mm = lhs.first_mismatch(rhs)
    return mm is None, mm


# -- Gasper-Rahman residue sum --------------------------------------------------

@dataclass(frozen=True)
class GRSpec:
    a: tuple
    b: tuple
    c: tuple
    d: tuple = ()
    step: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "step", Fraction(self.step))
        if not self.c:
            raise ValueError("the residue sum needs at least one c parameter")

    @property
    def A(self):
        return len(self.a)

    @property
    def B(self):
        return len(self.b)

    @property
    def C(self):
        return len(self.c)

    @property
    def D(self):
        return len(self.d)

    def ratio(self) -> MonomialArg:
        r = mono(1, 0)
        for x in self.a:
            r = r * x
        for x in self.c:
            r = r / x
        return r

    def check(self):
        s = self.step
        for i, ci in enumerate(self.c):
            for j, cj in enumerate(self.c):
                if i != j:
                    q = ci / cj
                    if q.coeff == ONE and (q.exp / s).denominator == 1:
                        raise PoleCollisionError(
                            f"c[{i}]/c[{j}] = {q} is an integer power of the base")
        if self.C < self.A:
            raise FormalDivergenceError("the residue sum needs C >= A")
        if self.C == self.A and self.ratio().exp <= 0:
            raise FormalDivergenceError(
                "with C = A the ratio a_1...a_A/(c_1...c_C) must have positive order")

    def to_json(self) -> dict:
        from qrr.multisum import _mono_json
        return {"a": [_mono_json(x) for x in self.a], "b": [_mono_json(x) for x in self.b],
                "c": [_mono_json(x) for x in self.c], "d": [_mono_json(x) for x in self.d],
                "step": str(self.step)}

    @classmethod
    def from_json(cls, d: dict) -> "GRSpec":
        from qrr.multisum import mono_from_json
        return cls(*(tuple(mono_from_json(x) for x in d.get(k, [])) for k in "abcd"),
                   step=Fraction(d.get("step", 1)))


def _neg_part(args, s) -> Fraction:
    return sum((PochFactor(x, s).negative_part() for x in args), Fraction(0))


def _residue_term(spec: GRSpec, k: int, order: Fraction) -> QSeries:
    s = spec.step
    ck = spec.c[k]
    others = [cl for l, cl in enumerate(spec.c) if l != k]
    p = mono(1, s)
    pre_num = [bj * ck for bj in spec.b] + [ai / ck for ai in spec.a]
    pre_den = [p] + [dj * ck for dj in spec.d] + [cl / ck for cl in others]
    sum_num = [dj * ck for dj in spec.d] + [p * ck / ai for ai in spec.a]
    sum_den = [p] + [bj * ck for bj in spec.b] + [p * ck / cl for cl in others]
    for x in pre_num:
        if x.exp <= 0 and x.coeff == ONE and (x.exp / s).denominator == 1:
            return QSeries.zero(order)  # a vanishing factor (1 - q^0) after the shift
    for x in sum_den:
        if x.exp <= 0 and x.coeff == ONE and (x.exp / s).denominator == 1:
            raise PoleCollisionError(f"denominator factor {x} vanishes in the residue sum")
    v_pre = _neg_part(pre_num, s)
    v_sum = _neg_part(sum_num, s)
    # prefactor correct below order - v_sum, sum correct below order - v_pre
    pre_order = order - v_sum
    sum_order = order - v_pre
    pre = QSeries.one(pre_order - v_pre)
    for x in pre_num:
        pre = poch_apply(pre, PochFactor(x, s), 1)
    for x in pre_den:
        pre = poch_apply(pre, PochFactor(x, s), -1)
    pre = pre.truncate(pre_order)

    cd = spec.C - spec.A
    ratio = spec.ratio()
    total = QSeries.zero(sum_order)
    work = sum_order - v_sum
    poch = QSeries.one(work)
    n = 0
    while True:
        e_n = cd * n * (ck.exp + s * Fraction(n + 1, 2)) + n * ratio.exp
        # e_n + v_sum bounds the valuation of term n; once its increments are
        # positive they stay positive
        if e_n + v_sum >= sum_order and cd * (ck.exp + s * (n + 1)) + ratio.exp > 0:
            break
        coeff = (-ck.coeff) ** (n * cd) * ratio.coeff ** n
        term = poch.truncate(sum_order - e_n).scale_by(coeff).shift(e_n).truncate(sum_order)
        total = total + term
        for x in sum_num:
            poch = poch.mul_binomial(x.coeff, x.exp + n * s)
        for x in sum_den:
            poch = poch.div_binomial(x.coeff, x.exp + n * s)
        n += 1
        if n > 100000:
            raise FormalDivergenceError("residue sum does not converge formally")
    return (pre * total).truncate(order)


def gr_rhs(spec: GRSpec, order) -> QSeries:
    """The residue-sum evaluation of the integral described by ``spec``."""
    spec.check()
    order = Fraction(order)
    out = QSeries.zero(order)
    for k in range(spec.C):
        out = out + _residue_term(spec, k, order)
    params = spec.a + spec.b + spec.c + spec.d
    if any(not x.coeff.is_rational() for x in params) and _sigma_closed(spec):
        if not out.is_rational():
            raise ArithmeticError("residue sum with conjugate-closed parameters is not rational")
    return out


def _sigma_closed(spec: GRSpec) -> bool:
    for group in (spec.a, spec.b, spec.c, spec.d):
        keys = sorted((str(x.coeff), x.exp) for x in group)
        conj = sorted((str(x.coeff.conjugate()), x.exp) for x in group)
        if keys != conj:
            return False
    return True


def gr_to_zfactors(spec: GRSpec):
    """Constant-term integrand equal to ``(p; p)_inf`` times the integrand of ``spec``.

    Requires ``b = (1,)``, ``d = ()`` and ``p`` among the ``a`` parameters,
    which together with ``1/z`` and ``(p; p)_inf`` make up the theta factor.
    """
    s = spec.step
    p = mono(1, s)
    if spec.d or spec.b != (mono(1, 0),) or p not in spec.a:
        raise ValueError("spec has no theta factor to absorb")
    a = list(spec.a)
    a.remove(p)
    out = [ZFactor.theta(s)]
    out += [ZFactor("EulerNum", x, 1, s) for x in a]
    out += [ZFactor("EulerDen", x, 1, s) for x in spec.c]
    return out
