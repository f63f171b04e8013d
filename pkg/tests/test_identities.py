"""Classical identities at monomial parameters, checked exactly."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qrr.coeffring import OMEGA, as_er
from qrr.expr import eval_expr
from qrr.multisum import SumPoch, SumTerm, eval_sum_term
from qrr.products import ProductFactor, ProductSide, cubic_cf, mono
from qrr.series import QSeries

ORDER = 80
coeffs = st.sampled_from([1, -1, OMEGA])


def inf(c, a, step=1, r=1):
    return ProductFactor(Fraction(a), Fraction(step), r, as_er(c))


def prod(*factors, order=ORDER):
    return ProductSide(tuple(factors)).evaluate(order)


def poch(c, a, step=1):
    return SumPoch(mono(c, a), step, [1])


def single(quad, lin, coeff=1, num=(), den=(), order=ORDER):
    """sum coeff^n q^(quad n^2 + lin n) num/(q;q)_n den for coeff in {1, -1, w}."""
    sign = 1 if coeff == -1 else 0
    omega = 1 if coeff == OMEGA else 0
    t = SumTerm(1, [[quad]], [lin], sign_lin=(sign,), omega_lin=(omega,),
                num_pochs=tuple(num), den_pochs=(poch(1, 1),) + tuple(den))
    return eval_sum_term(t, order)


@given(coeffs, st.integers(1, 4))
def test_euler_distinct(c, a):
    # sum q^C(n,2) z^n/(q;q)_n = (-z;q)_inf with z = c q^a
    lhs = single(Fraction(1, 2), Fraction(a) - Fraction(1, 2), c)
    assert lhs == prod(inf(-as_er(c), a))


@given(coeffs, st.integers(1, 4))
def test_euler_reciprocal(c, a):
    # sum z^n/(q;q)_n = 1/(z;q)_inf
    lhs = single(0, a, c)
    assert lhs == prod(inf(c, a, r=-1))


@settings(max_examples=30)
@given(st.sampled_from([1, -1]), st.integers(-2, 3), st.sampled_from([1, -1]), st.integers(1, 3))
def test_q_binomial(ca, ea, cz, ez):
    # sum (a;q)_n z^n/(q;q)_n = (az;q)_inf/(z;q)_inf
    if ea == 0 and ca == 1:
        return
    lhs = single(0, ez, cz, num=[poch(ca, ea)])
    rhs = ProductSide((inf(ca * cz, ea + ez), inf(cz, ez, r=-1))).evaluate(ORDER)
    assert lhs == rhs


@given(st.sampled_from([1, -1]), st.integers(-1, 4))
def test_lebesgue(c, e):
    # sum q^(n(n+1)/2) (a;q)_n/(q;q)_n = (aq;q^2)_inf (-q;q)_inf
    if e + 1 <= 0 and c == 1:
        return
    lhs = single(Fraction(1, 2), Fraction(1, 2), num=[poch(c, e)])
    assert lhs == prod(inf(c, e + 1, 2), inf(-1, 1))


@settings(max_examples=30)
@given(st.sampled_from([1, -1]), st.integers(0, 3), st.sampled_from([1, -1]), st.integers(1, 3),
       st.sampled_from([1, -1]), st.integers(1, 4), st.integers(1, 3))
def test_heine(ca, ea, cb, eb, cc, ec, et):
    """sum (a,b;q)_n t^n/(c,q;q)_n = (b, at;q)_inf/(c, t;q)_inf * sum (c/b, t;q)_n b^n/(at, q;q)_n."""
    order = 40
    lhs = eval_sum_term(SumTerm(1, [[0]], [et], num_pochs=(poch(ca, ea), poch(cb, eb)),
                                den_pochs=(poch(cc, ec), poch(1, 1))), order)
    inner = eval_sum_term(SumTerm(1, [[0]], [eb], sign_lin=(0 if cb == 1 else 1,),
                                  num_pochs=(poch(cc * cb, ec - eb), poch(1, et)),
                                  den_pochs=(poch(ca, ea + et), poch(1, 1))), order)
    front = prod(inf(cb, eb), inf(ca, ea + et), inf(cc, ec, r=-1), inf(1, et, r=-1), order=order)
    assert lhs == (front * inner).truncate(order)


def test_dissection_lemma():
    n = 120
    assert eval_expr("f3/f1^3", n) == eval_expr("f4^6*f6^3/(f2^9*f12^2)+3*q*f4^2*f6*f12^2/f2^7", n)
    assert eval_expr("f1^3/f3", n) == eval_expr("f4^3/f12-3*q*f2^2*f12^3/(f4*f6^2)", n)


def test_chan_cubic_identity():
    n = 60
    nu = cubic_cf(None, n / 3 + 2).subst_power(3)  # nu(q^3), valuation 1
    lhs = (nu.inverse() - QSeries.one(n) - nu.scale_by(2)).truncate(n)
    assert lhs == eval_expr("f1*f2/(q*f9*f18)", n)


# -- truncation monotonicity ------------------------------------------------------

units = st.one_of(
    st.integers(1, 8).map(lambda m: f"f{m}"),
    st.tuples(st.sampled_from(["", "-"]), st.integers(1, 4), st.integers(1, 3)).map(
        lambda t: f"P({t[0]}q^{t[1]};q^{t[2]})_inf"),
)
polys = st.tuples(st.integers(-3, 3), st.integers(1, 5)).map(lambda t: f"(1+({t[0]})*q^{t[1]})")
composites = st.recursive(
    st.one_of(units, polys),
    lambda sub: st.one_of(
        st.tuples(sub, st.sampled_from("+-*"), sub).map(lambda t: f"({t[0]}{t[1]}{t[2]})"),
        st.tuples(sub, units).map(lambda t: f"({t[0]}/{t[1]})"),
        st.tuples(sub, st.integers(2, 3)).map(lambda t: f"({t[0]})^{t[1]}"),
    ),
    max_leaves=6,
)


@settings(max_examples=20)
@given(composites, st.integers(1, 39))
def test_truncation_monotonicity(text, m):
    big = eval_expr(text, 40)
    small = eval_expr(text, m)
    assert big.truncate(m) == small and small.order == m
