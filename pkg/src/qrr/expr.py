"""A small expression language for q-series.

Grammar (``^`` binds tighter than ``*``/``/``, which bind tighter than
``+``/``-``; binary operators associate to the left)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' exponent)*
    atom    := INT | 'w' | 'q' | 'f' INT | poch | '(' expr ')'
    poch    := 'P' '(' mono ';' mono ')' '_' (INT | 'inf' | '{' (INT | 'inf') '}')
    mono    := ['+' | '-'] [INT ['*']] ['w' ['^' INT] ['*']] ['q' ['^' exponent]]
    exponent:= ['-'] INT | '(' ['-'] INT ['/' INT] ')'

Examples: ``f3^2/(f1*f6)``, ``1/P(q;q^5)_inf/P(q^4;q^5)_inf``,
``P(-w*q^(1/3);q)_{5}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from qrr.coeffring import OMEGA, ONE, as_er, format_er, omega_pow
from qrr.products import EtaQuotient, MonomialArg, PochFactor, eta_expand, poch_expand
from qrr.series import QSeries

__all__ = [
    "ExprSyntaxError",
    "ExprEvalError",
    "Num",
    "Omega",
    "QPow",
    "Eta",
    "Poch",
    "Neg",
    "BinOp",
    "Pow",
    "parse_expr",
    "render",
    "eval_expr",
]


class ExprSyntaxError(ValueError):
    def __init__(self, offset: int, expected, found: str):
        self.offset = offset
        self.expected = sorted(set(expected))
        self.found = found
        super().__init__(
            f"syntax error at byte {offset}: expected one of {', '.join(self.expected)}; found {found}")


class ExprEvalError(ValueError):
    def __init__(self, message: str, span, source: Optional[str] = None):
        self.span = span
        self.source = source
        where = f" in {source[span[0]:span[1]]!r}" if source else ""
        super().__init__(f"{message}{where} (bytes {span[0]}-{span[1]})")


# -- AST -----------------------------------------------------------------------

_SPAN = dict(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: int
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class Omega:
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class QPow:
    exp: Fraction
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class Eta:
    m: int
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class Poch:
    arg: MonomialArg
    step: Fraction
    length: Optional[int]
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class Neg:
    operand: object
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    span: tuple = field(**_SPAN)


@dataclass(frozen=True)
class Pow:
    base: object
    exp: Fraction
    span: tuple = field(**_SPAN)


# -- tokens ----------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<eta>f\d+)|(?P<int>\d+)|(?P<name>inf|[wqP])|(?P<op>[-+*/^();_{}]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int', 'eta', or the literal text
    text: str
    start: int
    end: int


def _tokenize(text: str):
    toks = []
    pos = 0
    # offsets are reported in bytes of the UTF-8 source
    boff = [0]
    for ch in text:
        boff.append(boff[-1] + len(ch.encode("utf-8")))
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprSyntaxError(boff[pos], ["expression character"], repr(text[pos]))
        kind = m.lastgroup
        s = m.group(kind)
        start = m.start(kind)
        toks.append(_Tok(s if kind in ("name", "op") else kind, s, boff[start], boff[m.end()]))
        pos = m.end()
    toks.append(_Tok("end", "", boff[len(text)], boff[len(text)]))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, *kinds) -> Optional[_Tok]:
        if self.tok.kind in kinds:
            return self.take()
        return None

    def expect(self, *kinds) -> _Tok:
        t = self.accept(*kinds)
        if t is None:
            self.fail(kinds)
        return t

    def fail(self, expected):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ExprSyntaxError(t.start, expected, found)

    # grammar

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail(["+", "-", "*", "/", "^", "end of input"])
        return node

    def expr(self):
        node = self.term()
        while (t := self.accept("+", "-")) is not None:
            rhs = self.term()
            node = BinOp(t.kind, node, rhs, (node.span[0], rhs.span[1]))
        return node

    def term(self):
        node = self.unary()
        while (t := self.accept("*", "/")) is not None:
            rhs = self.unary()
            node = BinOp(t.kind, node, rhs, (node.span[0], rhs.span[1]))
        return node

    def unary(self):
        t = self.accept("-", "+")
        if t is None:
            return self.power()
        inner = self.unary()
        if t.kind == "+":
            return inner
        return Neg(inner, (t.start, inner.span[1]))

    def power(self):
        node = self.atom()
        while self.accept("^") is not None:
            e, end = self.exponent()
            node = Pow(node, e, (node.span[0], end))
        return node

    def exponent(self):
        if self.accept("(") is not None:
            neg = self.accept("-") is not None
            num = int(self.expect("int").text)
            den = 1
            if self.accept("/") is not None:
                den = int(self.expect("int").text)
                if den == 0:
                    raise ExprSyntaxError(self.toks[self.i - 1].start, ["nonzero int"], "0")
            end = self.expect(")").end
            v = Fraction(num, den)
            return (-v if neg else v), end
        neg = self.accept("-") is not None
        t = self.expect("int")
        v = Fraction(int(t.text))
        return (-v if neg else v), t.end

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.take()
            return Num(int(t.text), (t.start, t.end))
        if t.kind == "w":
            self.take()
            return Omega((t.start, t.end))
        if t.kind == "q":
            self.take()
            return QPow(Fraction(1), (t.start, t.end))
        if t.kind == "eta":
            self.take()
            m = int(t.text[1:])
            if m == 0:
                raise ExprSyntaxError(t.start, ["f<m> with m >= 1"], repr(t.text))
            return Eta(m, (t.start, t.end))
        if t.kind == "P":
            return self.poch()
        if t.kind == "(":
            self.take()
            node = self.expr()
            end = self.expect(")").end
            return _respan(node, (t.start, end))
        self.fail(["int", "w", "q", "f<m>", "P", "(", "-", "+"])

    def poch(self):
        start = self.take().start
        self.expect("(")
        arg = self.mono()
        self.expect(";")
        base = self.mono()
        if base.coeff != ONE or base.exp <= 0:
            raise ExprSyntaxError(self.toks[self.i - 1].start, ["q^<positive rational>"], str(base))
        self.expect(")")
        self.expect("_")
        if self.accept("{") is not None:
            length, _ = self.poch_len()
            end = self.expect("}").end
        else:
            length, end = self.poch_len()
        return Poch(arg, base.exp, length, (start, end))

    def poch_len(self):
        t = self.expect("int", "inf")
        return (None if t.kind == "inf" else int(t.text)), t.end

    def mono(self) -> MonomialArg:
        coeff = as_er(1)
        seen = False
        if self.accept("-") is not None:
            coeff = -coeff
        else:
            self.accept("+")
        if self.tok.kind == "int":
            coeff = coeff * int(self.take().text)
            seen = True
            if self.accept("*") is None and self.tok.kind not in ("w", "q"):
                return MonomialArg(coeff, 0)
        if self.accept("w") is not None:
            j = 1
            if self.accept("^") is not None:
                j = int(self.expect("int").text)
            coeff = coeff * omega_pow(j)
            seen = True
            if self.accept("*") is None and self.tok.kind != "q":
                return MonomialArg(coeff, 0)
        exp = Fraction(0)
        if self.accept("q") is not None:
            exp = Fraction(1)
            if self.accept("^") is not None:
                exp, _ = self.exponent()
            seen = True
        if not seen:
            self.fail(["int", "w", "q"])
        return MonomialArg(coeff, exp)


def _respan(node, span):
    return type(node)(**{**{k: getattr(node, k) for k in node.__dataclass_fields__}, "span": span})


def parse_expr(text: str):
    """Parse ``text`` into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


# -- rendering -------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _render_exp(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e.numerator)
    return f"({e})"


def _render_mono(m: MonomialArg) -> str:
    c, e = m.coeff, m.exp
    parts = []
    sign = ""
    if c.om == 0:
        if c.re < 0:
            sign, c = "-", -c
        if c.re != 1 or e == 0:
            if c.re.denominator != 1:
                raise ValueError(f"coefficient {format_er(m.coeff)} has no monomial syntax")
            parts.append(str(c.re.numerator))
    else:
        found = None
        for j in (1, 2):
            w = omega_pow(j)
            r = c / w
            if r.om == 0 and r.re.denominator == 1:
                found = (j, r.re.numerator)
                break
        if found is None:
            raise ValueError(f"coefficient {format_er(m.coeff)} has no monomial syntax")
        j, k = found
        if k < 0:
            sign, k = "-", -k
        if k != 1:
            parts.append(str(k))
        parts.append("w" if j == 1 else "w^2")
    if e != 0:
        parts.append("q" if e == 1 else f"q^{_render_exp(e)}")
    return sign + "*".join(parts)


def render(node, parent_prec: int = 0, right: bool = False) -> str:
    """Text that parses back to ``node``."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Omega):
        return "w"
    if isinstance(node, QPow):
        return "q" if node.exp == 1 else f"q^{_render_exp(node.exp)}"
    if isinstance(node, Eta):
        return f"f{node.m}"
    if isinstance(node, Poch):
        n = "inf" if node.length is None else str(node.length)
        step = "q" if node.step == 1 else f"q^{_render_exp(node.step)}"
        return f"P({_render_mono(node.arg)};{step})_{{{n}}}"
    if isinstance(node, Neg):
        s = "-" + render(node.operand, 3)
        return f"({s})" if parent_prec >= 2 or right else s
    if isinstance(node, Pow):
        return f"{render(node.base, 4)}^{_render_exp(node.exp)}"
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        s = f"{render(node.left, p)}{node.op}{render(node.right, p, True)}"
        if p < parent_prec or (right and p == parent_prec):
            return f"({s})"
        return s
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation ------------------------------------------------------------------

def _eval(node, order, source):
    try:
        if isinstance(node, Num):
            return QSeries.const(node.value, order)
        if isinstance(node, Omega):
            return QSeries.const(OMEGA, order)
        if isinstance(node, QPow):
            return QSeries.monomial(1, node.exp, order)
        if isinstance(node, Eta):
            return eta_expand(EtaQuotient(((node.m, 1),)), order)
        if isinstance(node, Poch):
            return poch_expand(PochFactor(node.arg, node.step, node.length), order)
        if isinstance(node, Neg):
            return -_eval(node.operand, order, source)
        if isinstance(node, Pow):
            if isinstance(node.base, QPow):
                return QSeries.monomial(1, node.base.exp * node.exp, order)
            if node.exp.denominator != 1:
                raise ValueError("only q may carry a fractional power")
            return _eval(node.base, order, source) ** int(node.exp)
        if isinstance(node, BinOp):
            a = _eval(node.left, order, source)
            b = _eval(node.right, order, source)
            if node.op == "+":
                return a + b
            if node.op == "-":
                return a - b
            if node.op == "*":
                return a * b
            return a / b
    except ExprEvalError:
        raise
    except (ArithmeticError, ValueError) as exc:
        raise ExprEvalError(f"{type(exc).__name__}: {exc}", node.span, source) from exc
    raise TypeError(f"not an expression node: {node!r}")


def eval_expr(node, order, *, source: Optional[str] = None, max_boost: int = 64) -> QSeries:
    """Evaluate to a series correct below ``order``.

    Negative valuations lose precision in products and quotients, so the
    evaluation is retried at a higher working order until the result is
    known up to ``order``.
    """
    if isinstance(node, str):
        source = node
        node = parse_expr(node)
    order = Fraction(order)
    extra = Fraction(0)
    while True:
        out = _eval(node, order + extra, source)
        if out.order >= order:
            return out.truncate(order)
        short = order - out.order
        if extra + short > max_boost + order:
            raise ExprEvalError("precision loss exceeds the boost limit", node.span, source)
        extra += short
