from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import coeff_list
from oracles import count_partitions, d_list, pentagonal
from qrr.catalog import load_catalog
from qrr.coeffring import omega_pow
from qrr.expr import (
    BinOp, Eta, ExprEvalError, ExprSyntaxError, Neg, Num, Omega, Poch, Pow, QPow, eval_expr,
    parse_expr, render,
)
from qrr.products import mono


def test_parse_poch():
    node = parse_expr("P(q;q)_inf")
    assert node == Poch(mono(1, 1), Fraction(1), None)


def test_parse_eta_quotient():
    node = parse_expr("f3^2/(f1*f6)")
    assert node == BinOp("/", Pow(Eta(3), Fraction(2)), BinOp("*", Eta(1), Eta(6)))


def test_precedence_and_associativity():
    assert parse_expr("1-2-3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expr("2*q^3") == BinOp("*", Num(2), Pow(QPow(Fraction(1)), Fraction(3)))
    assert parse_expr("8/4/2") == BinOp("/", BinOp("/", Num(8), Num(4)), Num(2))


def test_syntax_error_at_end():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("P(q;q)_inf +")
    assert info.value.offset == 12 and info.value.found == "end of input"
    assert "q" in info.value.expected


def test_syntax_error_offset_mid_string():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("f1 * * f2")
    assert info.value.offset == 5


def test_rr_product():
    s = eval_expr("1/P(q;q^5)_inf/P(q^4;q^5)_inf", 10)
    assert coeff_list(s, 10) == [1, 1, 1, 1, 2, 2, 3, 3, 4, 5]
    allowed = [n for n in range(1, 50) if n % 5 in (1, 4)]
    assert coeff_list(eval_expr("1/P(q;q^5)_inf/P(q^4;q^5)_inf", 50), 50) == count_partitions(50, allowed)


def test_eta_pentagonal():
    assert coeff_list(eval_expr("f1", 13), 13) == d_list(pentagonal(13), 13)


def test_non_invertible_has_span():
    with pytest.raises(ExprEvalError) as info:
        eval_expr("1/(f1-f1)", 10)
    assert info.value.span == (0, 9)


def test_fractional_power_and_omega():
    # (1 + w q^(1/3)) (1 + w q^(4/3))
    s = eval_expr("P(-w*q^(1/3);q)_{2}", 3)
    assert s.coeff(Fraction(1, 3)) == omega_pow(1)
    assert s.coeff(Fraction(5, 3)) == omega_pow(2)


def test_laurent_division_boosts_precision():
    s = eval_expr("(1+q)/q^3", 5)
    assert s.order == 5 and dict(s.terms()) == {-3: 1, -2: 1}


# -- render fixed point ------------------------------------------------------------

exps = st.fractions(min_value=-3, max_value=3, max_denominator=3)
monos = st.builds(lambda c, j, e: mono(omega_pow(j) * c, e),
                  st.sampled_from([1, -1, 2, -3]), st.integers(0, 2), exps)
leaves = st.one_of(
    st.builds(Num, st.integers(0, 9)),
    st.just(Omega()),
    st.builds(QPow, exps),
    st.builds(Eta, st.integers(1, 12)),
    st.builds(Poch, monos, st.sampled_from([Fraction(1), Fraction(2), Fraction(1, 3)]),
              st.one_of(st.none(), st.integers(0, 4))),
)
trees = st.recursive(leaves, lambda sub: st.one_of(
    st.builds(Neg, sub),
    st.builds(BinOp, st.sampled_from("+-*/"), sub, sub),
    st.builds(Pow, sub, st.integers(-3, 3).map(Fraction)),
), max_leaves=8)


@given(trees)
def test_parse_render_parse_fixed_point(tree):
    once = parse_expr(render(tree))
    assert parse_expr(render(once)) == once


@pytest.mark.parametrize("text", ["f3^2/(f1*f6)", "-(1-q)^2", "P(-w^2*q^(1/3);q^2)_{3}*f1", "1-(2-3)", "-q^(-1)"])
def test_render_roundtrip_examples(text):
    node = parse_expr(text)
    assert parse_expr(render(node)) == node


# -- agreement with catalog product sides ---------------------------------------------

def mono_text(m):
    """Monomial syntax, borrowed from how a Pochhammer argument renders."""
    return render(Poch(m, Fraction(1), None))[2:].split(";")[0]


def _factor_text(f):
    step = "q" if f.m == 1 else f"q^({f.m})"
    base = f"P({mono_text(mono(f.coeff, f.a))};{step})_inf"
    return base if f.r == 1 else f"{base}^({f.r})"


def _product_sides(side):
    if side.kind == "product":
        yield side.payload
    for ch in side.children:
        yield from _product_sides(ch)


def test_expressions_agree_with_catalog_products():
    seen = 0
    for entry in load_catalog():
        for side in (entry.lhs, entry.rhs):
            for ps in _product_sides(side):
                text = "*".join(_factor_text(f) for f in ps.factors) or "1"
                if ps.prefactor != mono(1, 0):
                    text = f"{mono_text(ps.prefactor)}*({text})"
                order = 30
                assert eval_expr(text, order) == ps.evaluate(order), (entry.id, text)
                seen += 1
    assert seen > 40
