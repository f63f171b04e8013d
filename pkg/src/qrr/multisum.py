"""Evaluation of multi-dimensional q-hypergeometric sums.

A :class:`SumTerm` is the sum over all nonnegative integer vectors ``i`` of

    prefactor * (-1)^(sign_lin.i) * w^(omega_lin.i) * q^(i.Q.i + lin.i + const)
        * prod num_pochs(i) / prod den_pochs(i)

where each Pochhammer has a length affine in ``i``. Enumeration is bounded
through the separable lower bound ``sum_a Q_aa i_a^2 + lin_a i_a``, valid
because every off-diagonal entry of ``Q`` is nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from qrr.coeffring import ONE, as_er, omega_pow
from qrr.products import MonomialArg, PochFactor, mono
from qrr.series import QSeries

__all__ = [
    "SumPoch",
    "SumTerm",
    "SumSide",
    "UnboundedEnumerationError",
    "eval_sum_term",
    "eval_sum_side",
    "binomial_quad",
]


class UnboundedEnumerationError(ValueError):
    """The quadratic form does not bound the summation range."""


def _frac(x) -> Fraction:
    return Fraction(x) if not isinstance(x, Fraction) else x


@dataclass(frozen=True)
class SumPoch:
    """``(arg; q^step)_{len_lin . i + len_const}``."""

    arg: MonomialArg
    step: Fraction
    len_lin: tuple
    len_const: int = 0

    def __post_init__(self):
        object.__setattr__(self, "step", _frac(self.step))
        object.__setattr__(self, "len_lin", tuple(int(x) for x in self.len_lin))
        if self.step <= 0:
            raise ValueError("Pochhammer step must be positive")
        if any(x < 0 for x in self.len_lin) or self.len_const < 0:
            raise ValueError("Pochhammer length must be nonnegative on the orthant")

    def length(self, idx) -> int:
        return self.len_const + sum(a * i for a, i in zip(self.len_lin, idx))

    def negative_part(self) -> Fraction:
        return PochFactor(self.arg, self.step).negative_part()


@dataclass(frozen=True)
class SumTerm:
    dim: int
    quad: tuple
    lin: tuple
    const: Fraction = Fraction(0)
    sign_lin: tuple = ()
    omega_lin: tuple = ()
    num_pochs: tuple = ()
    den_pochs: tuple = ()
    prefactor: MonomialArg = field(default_factory=lambda: mono(1, 0))

    def __post_init__(self):
        k = self.dim
        quad = tuple(tuple(_frac(x) for x in row) for row in self.quad) if k else ()
        lin = tuple(_frac(x) for x in self.lin) if k else ()
        object.__setattr__(self, "quad", quad)
        object.__setattr__(self, "lin", lin)
        object.__setattr__(self, "const", _frac(self.const))
        object.__setattr__(self, "sign_lin", tuple(self.sign_lin) or (0,) * k)
        object.__setattr__(self, "omega_lin", tuple(self.omega_lin) or (0,) * k)
        object.__setattr__(self, "num_pochs", tuple(self.num_pochs))
        object.__setattr__(self, "den_pochs", tuple(self.den_pochs))
        self.validate()

    def validate(self):
        k = self.dim
        if len(self.quad) != k or any(len(r) != k for r in self.quad):
            raise ValueError("quad must be a dim x dim matrix")
        if len(self.lin) != k or len(self.sign_lin) != k or len(self.omega_lin) != k:
            raise ValueError("lin, sign_lin and omega_lin must have length dim")
        for a in range(k):
            for b in range(k):
                if self.quad[a][b] != self.quad[b][a]:
                    raise ValueError("quad must be symmetric")
                if a != b and self.quad[a][b] < 0:
                    raise UnboundedEnumerationError(
                        f"negative cross term quad[{a}][{b}] breaks the enumeration bound")
            if self.quad[a][a] < 0 or (self.quad[a][a] == 0 and self.lin[a] <= 0):
                raise UnboundedEnumerationError(f"axis {a} is not bounded by the exponent")
        for p in self.num_pochs + self.den_pochs:
            if len(p.len_lin) != k:
                raise ValueError("Pochhammer length vector must have length dim")
        for p in self.den_pochs:
            e0 = p.arg.exp
            if e0 < 0 or (e0 == 0 and p.arg.coeff == ONE):
                raise ValueError(
                    "denominator Pochhammer must have positive factor exponents "
                    "(or a zero exponent with coefficient != 1)")

    def exponent(self, idx) -> Fraction:
        e = self.const
        for a in range(self.dim):
            ia = idx[a]
            if not ia:
                continue
            row = self.quad[a]
            e += row[a] * ia * ia + self.lin[a] * ia
            for b in range(a + 1, self.dim):
                if idx[b]:
                    e += 2 * row[b] * ia * idx[b]
        return e

    def delta(self) -> Fraction:
        """Largest possible drop in valuation caused by numerator Pochhammers."""
        return -sum((p.negative_part() for p in self.num_pochs), Fraction(0))

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "quad": [[str(x) for x in row] for row in self.quad],
            "lin": [str(x) for x in self.lin],
            "const": str(self.const),
            "sign_lin": list(self.sign_lin),
            "omega_lin": list(self.omega_lin),
            "num_pochs": [_poch_json(p) for p in self.num_pochs],
            "den_pochs": [_poch_json(p) for p in self.den_pochs],
            "prefactor": _mono_json(self.prefactor),
        }

    @classmethod
    def from_json(cls, d: dict) -> "SumTerm":
        k = int(d["dim"])
        return cls(
            dim=k,
            quad=d.get("quad", [[0] * k for _ in range(k)]),
            lin=d.get("lin", [0] * k),
            const=_frac(d.get("const", 0)),
            sign_lin=tuple(d.get("sign_lin", [0] * k)),
            omega_lin=tuple(d.get("omega_lin", [0] * k)),
            num_pochs=tuple(_poch_from_json(p, k) for p in d.get("num_pochs", [])),
            den_pochs=tuple(_poch_from_json(p, k) for p in d.get("den_pochs", [])),
            prefactor=mono_from_json(d.get("prefactor", {"coeff": "1", "exp": "0"})),
        )


def _mono_json(m: MonomialArg) -> dict:
    from qrr.coeffring import format_er
    return {"coeff": format_er(m.coeff), "exp": str(m.exp)}


def mono_from_json(d) -> MonomialArg:
    if isinstance(d, dict):
        return MonomialArg(as_er(str(d.get("coeff", "1"))), _frac(d.get("exp", 0)))
    raise ValueError(f"bad monomial {d!r}")


def _poch_json(p: SumPoch) -> dict:
    out = _mono_json(p.arg)
    out.update({"step": str(p.step), "len_lin": list(p.len_lin), "len_const": p.len_const})
    return out


def _poch_from_json(d: dict, k: int) -> SumPoch:
    return SumPoch(mono_from_json(d), _frac(d.get("step", 1)),
                   tuple(d.get("len_lin", [0] * k)), int(d.get("len_const", 0)))


@dataclass(frozen=True)
class SumSide:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("a sum side needs at least one term")


# -- enumeration ---------------------------------------------------------------

def _axis_min(qa: Fraction, la: Fraction) -> Fraction:
    if qa == 0:
        return Fraction(0)
    v = -la / (2 * qa)
    best = None
    for x in {max(0, floor(v)), max(0, ceil(v))}:
        g = qa * x * x + la * x
        best = g if best is None or g < best else best
    return best


def axis_bounds(t: SumTerm, order, slack: int = 0):
    """Exclusive upper bounds per axis for indices that can reach below ``order``."""
    order = _frac(order)
    limit = order - t.const - t.prefactor.exp + t.delta()
    mins = [_axis_min(t.quad[a][a], t.lin[a]) for a in range(t.dim)]
    total_min = sum(mins, Fraction(0))
    bounds = []
    for a in range(t.dim):
        qa, la = t.quad[a][a], t.lin[a]
        thresh = limit - (total_min - mins[a])
        # g is convex (or increasing linear); walk until it exceeds the threshold past the vertex
        vertex = 0 if qa == 0 else max(0, ceil(-la / (2 * qa)))
        x = vertex
        while qa * x * x + la * x < thresh:
            x += 1
        bounds.append(x + slack)
    return bounds, limit, mins


def _enumerate(t: SumTerm, order, slack=0):
    bounds, limit, mins = axis_bounds(t, order, slack)
    k = t.dim
    quad, lin = t.quad, t.lin
    suffix_min = [Fraction(0)] * (k + 1)
    for a in range(k - 1, -1, -1):
        suffix_min[a] = suffix_min[a + 1] + mins[a]
    idx = [0] * k
    out = []

    def rec(a, partial):
        if a == k:
            out.append(tuple(idx))
            return
        qa, la = quad[a][a], lin[a]
        row = quad[a]
        for x in range(bounds[a]):
            cross = Fraction(0)
            for b in range(a):
                if idx[b]:
                    cross += 2 * row[b] * idx[b]
            val = partial + qa * x * x + la * x + cross * x
            if val + suffix_min[a + 1] >= limit:
                # convex in x beyond the vertex: stop once past it
                if qa == 0 or x >= -la / (2 * qa):
                    break
                continue
            idx[a] = x
            rec(a + 1, val)
        idx[a] = 0

    rec(0, Fraction(0))
    return out


class _Family:
    """Prefix products of one Pochhammer (or its reciprocal), memoised by length."""

    def __init__(self, poch: SumPoch, invert: bool, precision):
        self.poch = poch
        self.invert = invert
        self.items = [QSeries.one(precision)]

    def get(self, n: int) -> QSeries:
        items = self.items
        p = self.poch
        while len(items) <= n:
            k = len(items) - 1
            e = p.arg.exp + k * p.step
            last = items[-1]
            items.append(last.div_binomial(p.arg.coeff, e) if self.invert
                         else last.mul_binomial(p.arg.coeff, e))
        return items[n]


def eval_sum_term(t: SumTerm, order, *, slack: int = 0) -> QSeries:
    """The sum described by ``t``, correct below ``order``."""
    order = _frac(order)
    points = _enumerate(t, order, slack)
    delta = t.delta()
    acc = QSeries.zero(order)
    if not points:
        return acc
    exps = [t.exponent(p) + t.prefactor.exp for p in points]
    emin = min(exps)
    # relative precision of the Pochhammer factors, widened for Laurent numerators
    precision = order - emin + delta + 1
    fams = [_Family(p, False, precision) for p in t.num_pochs]
    fams += [_Family(p, True, precision) for p in t.den_pochs]
    pochs = t.num_pochs + t.den_pochs
    c0 = t.prefactor.coeff
    for point, e in zip(points, exps):
        rel = order - e
        if rel + delta <= 0:
            continue
        sgn = sum(s * i for s, i in zip(t.sign_lin, point)) % 2
        wexp = sum(s * i for s, i in zip(t.omega_lin, point)) % 3
        c = c0 * omega_pow(wexp) if wexp else c0
        if sgn:
            c = -c
        term = None
        for fam, p in zip(fams, pochs):
            s = fam.get(p.length(point)).truncate(rel + delta)
            term = s if term is None else term * s
        if term is None:
            term = QSeries.monomial(c, e, order)
        else:
            term = term.scale_by(c).shift(e).truncate(order)
        acc = acc + term
    return acc


def eval_sum_side(side: SumSide, order, *, slack: int = 0) -> QSeries:
    acc = None
    for t in side.terms:
        s = eval_sum_term(t, order, slack=slack)
        acc = s if acc is None else acc + s
    return acc


def binomial_quad(coeffs, scale=1):
    """Expand ``scale * C(c.i, 2)`` into ``(quad, lin)``.

    ``C(x, 2) = (x^2 - x)/2``; used to pre-expand exponents such as
    ``C(i + 2j + 3k + 4l, 2)`` into the quadratic form.
    """
    s = _frac(scale)
    k = len(coeffs)
    quad = [[s * coeffs[a] * coeffs[b] / 2 for b in range(k)] for a in range(k)]
    lin = [-s * coeffs[a] / 2 for a in range(k)]
    return quad, lin
