from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import coeff_list
from oracles import bilateral_theta, d_finite_poch, d_inf_poch, d_list, pentagonal
from qrr.coeffring import OMEGA
from qrr.products import (
    DivergentProductError, EtaQuotient, PochFactor, ProductFactor, ProductSide, cubic_cf,
    cubic_cf_depth, eta_expand, mono, poch_expand, theta_jtp, theta_product,
)
from qrr.series import QSeries


def test_finite_poch():
    assert coeff_list(poch_expand(PochFactor(mono(1, 1), 1, 3), 8), 8) == [1, -1, -1, 0, 1, 1, -1, 0]


def test_poch_with_negative_exponent():
    s = poch_expand(PochFactor(mono(-1, -1), 2, 2), 5)
    assert {e: c.re for e, c in s.terms()} == {-1: 1, 0: 2, 1: 1}


def test_euler_function_pentagonal():
    s = poch_expand(PochFactor(mono(1, 1), 1), 13)
    assert coeff_list(s, 13) == d_list(pentagonal(13), 13)


def test_divergent_product():
    with pytest.raises(DivergentProductError):
        poch_expand(PochFactor(mono(1, 1), 0), 5)


def test_eta_quotient_small():
    s = eta_expand(EtaQuotient(((3, 2), (1, -1), (6, -1))), 5)
    assert coeff_list(s, 5) == [1, 1, 2, 1, 3]


def test_eta_cancellation():
    assert eta_expand(EtaQuotient(((1, 10), (1, -10))), 20) == QSeries.one(20)
    assert coeff_list(eta_expand(EtaQuotient(((1, 1),)), 13), 13) == d_list(pentagonal(13), 13)


def test_theta_is_euler_at_step_three():
    assert coeff_list(theta_jtp(mono(1, 1), 3, 13), 13) == d_list(pentagonal(13), 13)


def test_theta_step_two():
    assert coeff_list(theta_jtp(mono(1, 1), 2, 10), 10) == d_list(bilateral_theta(1, 2, 10), 10)
    assert coeff_list(theta_jtp(mono(1, 1), 2, 10), 10) == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]


def test_theta_boundary_rejected():
    with pytest.raises(ValueError):
        theta_jtp(mono(1, 3), 3, 10)


def test_cubic_cf_first_convergents():
    assert dict(cubic_cf(0, 5).terms()) == {Fraction(1, 3): 1}
    one = cubic_cf(1, 6)
    assert [one.coeff(Fraction(1, 3) + k).re for k in range(5)] == [1, -1, 0, 1, -1]


def test_cubic_cf_depth_rule():
    for order in (5, 20, 40):
        d = cubic_cf_depth(order)
        assert cubic_cf(d, order) == cubic_cf(d + 3, order)


def test_product_side_with_prefactor():
    side = ProductSide((ProductFactor(1, 5, -1), ProductFactor(4, 5, -1)), mono(-1, 2))
    s = side.evaluate(10)
    assert s.order == 10 and s.coeff(2).re == -1 and s.coeff(3).re == -1


@given(st.integers(1, 5), st.integers(1, 4), st.sampled_from([1, -1]), st.integers(-2, 2))
def test_inf_poch_matches_oracle(a, step, c, power):
    got = ProductSide((ProductFactor(a, step, power, c),)).evaluate(30)
    want = d_inf_poch(c, a, step, 30, power) if power else {0: 1}
    assert coeff_list(got, 30) == d_list(want, 30)


@given(st.integers(-4, 4), st.integers(1, 3), st.integers(0, 5), st.sampled_from([1, -1]))
def test_finite_poch_matches_oracle(a, step, length, c):
    got = poch_expand(PochFactor(mono(c, a), step, length), 20)
    want = d_finite_poch(c, a, step, length, 20)
    assert {int(e): x.re for e, x in got.terms()} == want


@given(st.data())
def test_jtp_randomized(data):
    s = data.draw(st.integers(2, 6))
    a = data.draw(st.integers(1, s - 1))
    x = mono(data.draw(st.sampled_from([1, -1])), a)
    assert theta_jtp(x, s, 80) == theta_product(x, s, 80)


def test_jtp_with_omega_coefficient():
    x = mono(OMEGA, 1)
    assert theta_jtp(x, 2, 40) == theta_product(x, 2, 40)
