"""Generate src/qrr/data/catalog.json.

Run from the repository root:  python3 scripts/build_catalog.py
"""

import json
from fractions import Fraction as Fr
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "qrr" / "data" / "catalog.json"


def s(x):
    return str(Fr(x)) if not isinstance(x, str) else x


def m(coeff=1, exp=0):
    return {"coeff": s(coeff), "exp": s(exp)}


def poch(coeff, exp, step, len_lin, len_const=0):
    d = m(coeff, exp)
    d.update({"step": s(step), "len_lin": list(len_lin), "len_const": len_const})
    return d


def qpoch(step, dim, axis, extra=0):
    """(q^step; q^step)_{i_axis + extra}"""
    lin = [0] * dim
    lin[axis] = 1
    return poch(1, step, step, lin, extra)


def term(quad, lin, const=0, sign=None, omega=None, num=(), den=(), pre=(1, 0)):
    k = len(lin)
    return {
        "dim": k,
        "quad": [[s(x) for x in row] for row in quad],
        "lin": [s(x) for x in lin],
        "const": s(const),
        "sign_lin": list(sign or [0] * k),
        "omega_lin": list(omega or [0] * k),
        "num_pochs": list(num),
        "den_pochs": list(den),
        "prefactor": m(*pre),
    }


def sum_side(*terms):
    return {"kind": "sum", "terms": list(terms)}


def prod(factors, pre=(1, 0)):
    out = []
    for f in factors:
        a, mod, r = f[:3]
        d = {"a": s(a), "m": s(mod), "r": r}
        if len(f) > 3:
            d["coeff"] = s(f[3])
        out.append(d)
    return {"kind": "product", "factors": out, "prefactor": m(*pre)}


def inv_prod(mod, residues, pre=(1, 0)):
    """1/(q^a1, q^a2, ...; q^mod)_inf"""
    return prod([(a, mod, -1) for a in residues], pre)


def expr(text):
    return {"kind": "expr", "expr": text}


def zf(kind, coeff=1, exp=0, zpow=1, step=1):
    return {"kind": kind, "coeff": s(coeff), "exp": s(exp), "zpow": zpow, "step": s(step)}


def theta(step=1):
    return {"kind": "Theta", "coeff": "1", "exp": s(step), "zpow": 1, "step": s(step)}


def ct(*factors):
    return {"kind": "ct", "factors": list(factors)}


def gr(a, b, c, d=(), step=1):
    return {"kind": "gr", "a": [m(*x) for x in a], "b": [m(*x) for x in b],
            "c": [m(*x) for x in c], "d": [m(*x) for x in d], "step": s(step)}


def add(*sides):
    return {"kind": "add", "terms": list(sides)}


def mul(*sides):
    return {"kind": "mul", "terms": list(sides)}


def power(side, k):
    return {"kind": "pow", "base": side, "k": k}


def scale(side, coeff=1, exp=0):
    return {"kind": "scale", "coeff": s(coeff), "exp": s(exp), "side": side}


def subst(side, p):
    return {"kind": "subst", "power": s(p), "side": side}


def root(side, j):
    return {"kind": "root", "j": j, "side": side}


def extract(side, residue, modulus):
    return {"kind": "extract", "residue": residue, "modulus": modulus, "side": side}


ENTRIES = []


def entry(eid, status, lhs, rhs, order, desc, ring="rational", omega_free=None, notes=""):
    d = {"id": eid, "status": status, "lhs": lhs, "rhs": rhs, "default_order": order,
         "ring": ring, "description": desc}
    if omega_free is not None:
        d["omega_free"] = omega_free
    if notes:
        d["notes"] = notes
    ENTRIES.append(d)


# -- shared sum sides ------------------------------------------------------------

def single(quad, lin, num=(), den=(), const=0, sign=0, omega=0, pre=(1, 0)):
    return term([[quad]], [lin], const, [sign], [omega], num, den, pre)


def d1(*pochs):
    """Pochhammers of length n in a one-dimensional sum."""
    return [poch(c, e, st, [1]) for c, e, st in pochs]


def double_12(lin, const=0, pre=(1, 0)):
    """sum q^(i^2+2ij+2j^2 + lin) / ((q;q)_i (q^2;q^2)_j)"""
    return term([[1, 1], [1, 2]], lin, const, den=[qpoch(1, 2, 0), qpoch(2, 2, 1)], pre=pre)


def double_13(lin, sign=(0, 1)):
    """sum (-1)^j q^(i^2+3ij+9j^2/2 + lin) / ((q;q)_i (q^3;q^3)_j)"""
    return term([[1, Fr(3, 2)], [Fr(3, 2), Fr(9, 2)]], lin, sign=list(sign),
                den=[qpoch(1, 2, 0), qpoch(3, 2, 1)])


def double_14(lin, const=0, pre=(1, 0)):
    """sum q^(3i^2/2+4ij+4j^2 + lin) / ((q;q)_i (q^4;q^4)_j)"""
    return term([[Fr(3, 2), 2], [2, 4]], lin, const, den=[qpoch(1, 2, 0), qpoch(4, 2, 1)], pre=pre)


def triple_146(eu, ev, ew):
    """(-1)^k q^(3k(k-1) + (i+2j+3k)(i+2j+3k-1)) u^i v^j w^k / ((q;q)_i (q^4;q^4)_j (q^6;q^6)_k)"""
    S = (1, 2, 3)
    quad = [[S[a] * S[b] + (3 if a == b == 2 else 0) for b in range(3)] for a in range(3)]
    lin = [-S[0] + eu, -S[1] + ev, -S[2] - 3 + ew]
    return term(quad, lin, sign=[0, 0, 1],
                den=[qpoch(1, 3, 0), qpoch(4, 3, 1), qpoch(6, 3, 2)])


def triple_123(extra_j2, lin_extra):
    """q^(C(i+2j+3k,2) + extra_j2*j^2 + lin_extra) / ((q;q)_i (q^2;q^2)_j (q^3;q^3)_k)"""
    S = (1, 2, 3)
    quad = [[Fr(S[a] * S[b], 2) + (extra_j2 if a == b == 1 else 0) for b in range(3)]
            for a in range(3)]
    lin = [Fr(-S[a], 2) + lin_extra[a] for a in range(3)]
    return term(quad, lin, den=[qpoch(1, 3, 0), qpoch(2, 3, 1), qpoch(3, 3, 2)])


def quad_F(u, v, w, t, pre=(1, 0)):
    """(-1)^l u^i v^j w^k t^l q^(C(i+2j+3k+4l,2)+2l^2-2l) / ((q;q)_i (q^2;q^2)_j (q^3;q^3)_k (q^4;q^4)_l)"""
    S = (1, 2, 3, 4)
    quad = [[Fr(S[a] * S[b], 2) + (2 if a == b == 3 else 0) for b in range(4)] for a in range(4)]
    lin = [Fr(-S[0], 2) + u, Fr(-S[1], 2) + v, Fr(-S[2], 2) + w, Fr(-S[3], 2) - 2 + t]
    return term(quad, lin, sign=[0, 0, 0, 1], pre=pre,
                den=[qpoch(1, 4, 0), qpoch(2, 4, 1), qpoch(3, 4, 2), qpoch(4, 4, 3)])


def quad_F_factors(u, v, w, t):
    """Integrand whose constant term is the quadruple sum at (q^u, q^v, q^w, q^t)."""
    return ct(zf("EulerDen", -1, u), zf("EulerDen", 1, v, 2, 2), zf("EulerDen", -1, w, 3, 3),
              zf("EulerNum", 1, t, 4, 4), theta(1))


# -- theorems --------------------------------------------------------------------

entry("rr1", "theorem", sum_side(single(1, 0, den=d1((1, 1, 1)))), inv_prod(5, [1, 4]), 120,
      "Rogers-Ramanujan, first identity")
entry("rr2", "theorem", sum_side(single(1, 1, den=d1((1, 1, 1)))), inv_prod(5, [2, 3]), 120,
      "Rogers-Ramanujan, second identity")

slater_den = d1((1, 2, 2))
entry("slater34", "theorem", sum_side(single(1, 2, num=d1((-1, 1, 2)), den=slater_den)),
      inv_prod(8, [3, 4, 5]), 120, "Slater (34): q^(n^2+2n)(-q;q^2)_n/(q^2;q^2)_n")
entry("slater36", "theorem", sum_side(single(1, 0, num=d1((-1, 1, 2)), den=slater_den)),
      inv_prod(8, [1, 4, 7]), 120, "Slater (36): q^(n^2)(-q;q^2)_n/(q^2;q^2)_n")
entry("gollnitz22", "theorem", sum_side(single(1, 1, num=d1((-1, -1, 2)), den=slater_den)),
      inv_prod(8, [1, 5, 6]), 120, "Gollnitz: q^(n^2+n)(-1/q;q^2)_n/(q^2;q^2)_n")
entry("gollnitz24", "theorem", sum_side(single(1, 1, num=d1((-1, 1, 2)), den=slater_den)),
      inv_prod(8, [2, 3, 7]), 120, "Gollnitz: q^(n^2+n)(-q;q^2)_n/(q^2;q^2)_n")

for k in (2, 3, 4):
    dim = k - 1
    quad = [[min(a, b) + 1 for b in range(dim)] for a in range(dim)]
    den = [qpoch(1, dim, a) for a in range(dim)]
    for i in range(1, k + 1):
        lin = [max(0, a + 1 - i + 1) for a in range(dim)]
        M = 2 * k + 1
        rhs = prod([(i, M, 1), (M - i, M, 1), (M, M, 1), (1, 1, -1)])
        entry(f"ag-k{k}-i{i}", "theorem", sum_side(term(quad, lin, den=den)), rhs,
              120 if dim <= 2 else 80, f"Andrews-Gordon, k={k}, i={i}")

entry("kr-triple-1", "theorem", sum_side(triple_146(1, 6, 9)), inv_prod(12, [1, 4, 6, 8, 11]), 80,
      "triple sum of index (1,4,6) at (u,v,w)=(q,q^6,q^9)")
entry("kr-triple-2", "theorem", sum_side(triple_146(1, 1, 6)),
      prod([(3, 4, -1), (1, 12, -1), (8, 12, -1)]), 80,
      "triple sum of index (1,4,6) at (u,v,w)=(q,q,q^6)")
entry("akkk", "theorem",
      sum_side(term([[2, 3], [3, 6]], [0, 0], den=[qpoch(1, 2, 0), qpoch(3, 2, 1)])),
      prod([(3, 6, -1), (2, 12, -1), (10, 12, -1)]), 120,
      "index (1,3) double sum equivalent to Capparelli's identity")
entry("takigiku", "theorem",
      sum_side(term([[Fr(1, 2), 1], [1, 1]], [Fr(1, 2), 0], sign=[0, 1],
                    den=[qpoch(1, 2, 0), qpoch(2, 2, 1)])),
      inv_prod(14, [2, 3, 4, 10, 11, 12]), 120, "index (1,2) double sum with modulus 14")
entry("slater81", "theorem",
      sum_side(single(Fr(1, 2), Fr(1, 2), den=d1((1, 1, 1), (1, 1, 2)))),
      prod([(1, 7, 1), (6, 7, 1), (7, 7, 1), (5, 14, 1), (9, 14, 1), (1, 1, -1), (1, 2, -1)]), 120,
      "Slater (81): q^((i^2+i)/2)/((q;q)_i (q;q^2)_i)")
entry("andrews-double", "theorem",
      sum_side(term([[1, 1], [1, 1]], [0, 0], sign=[0, 1], den=[qpoch(1, 2, 0), qpoch(2, 2, 1)])),
      inv_prod(14, [2, 4, 10, 12]), 120, "(-1)^j q^((i+j)^2)/((q;q)_i (q^2;q^2)_j)")

entry("uz1", "theorem", sum_side(double_12([0, 0])), expr("f3^2/(f1*f6)"), 120,
      "index (1,2): q^(i^2+2ij+2j^2) sum, eta quotient f3^2/(f1 f6)")
entry("uz2", "theorem", sum_side(double_12([1, 2])), expr("f6^2/(f2*f3)"), 120,
      "index (1,2): q^(i^2+2ij+2j^2+i+2j) sum, eta quotient f6^2/(f2 f3)")
entry("uz3", "theorem", sum_side(double_12([0, 1])), prod([(1, 1, 1, -1)]), 120,
      "index (1,2): q^(i^2+2ij+2j^2+j) sum equals (-q;q)_inf")

entry("rama1", "theorem",
      sum_side(single(1, 2, sign=1, num=d1((1, 1, 2)), den=d1((1, 4, 4)))),
      expr("f3*f12/(f4*f6)"), 120, "(-1)^n (q;q^2)_n q^(n^2+2n)/(q^4;q^4)_n")
entry("rama2", "theorem",
      sum_side(single(1, 1, num=d1((-1, 2, 2)), den=[poch(1, 1, 1, [2], 1)])),
      expr("f3*f12/(f1*f6)"), 120, "(-q^2;q^2)_n q^(n^2+n)/(q;q)_(2n+1)")
entry("rama3", "theorem",
      sum_side(single(1, 0, num=d1((-1, 1, 2)), den=[poch(1, 1, 1, [2])])),
      expr("f6^2/(f1*f12)"), 120, "(-q;q^2)_n q^(n^2)/(q;q)_(2n)")

entry("au", "theorem", sum_side(double_13([0, Fr(3, 2)])), inv_prod(3, [1]), 120,
      "index (1,3): (-1)^j q^(i^2+3ij+3j(3j+1)/2) sum equals 1/(q;q^3)_inf")
entry("au-rr", "theorem",
      sum_side(single(Fr(1, 2), Fr(1, 2), sign=1, omega=1, den=d1((1, 1, 1), ("w^2", 1, 1)))),
      prod([(1, 1, 1, "w"), (2, 3, 1)]), 120,
      "(-w)^n q^(n(n+1)/2)/(q, w^2 q; q)_n equals (wq;q)_inf (q^2;q^3)_inf",
      ring="eisenstein", omega_free=False,
      notes="The product 1/(q;q^3)_inf sometimes quoted for this sum already fails at q^1; "
            "this is the value reached by the residue evaluation in the index (1,3) proof.")
entry("wang", "theorem",
      sum_side(single(Fr(3, 2), Fr(5, 2), sign=1, num=d1((1, 1, 3)), den=d1((1, 9, 9)))),
      prod([(4, 6, 1), (12, 18, 1), (5, 6, -1), (9, 18, -1)]), 120,
      "(-1)^n q^(3n^2/2+5n/2)(q;q^3)_n/(q^9;q^9)_n")


def chern_side(c, e):
    """(a;q)_n (q^2/a;q^2)_n/((a^2 q;q^2)_n (q^3;q^3)_n) (-1)^n a^n q^(n(n+1)/2) at a = c q^e."""
    sign = 1 + (1 if c == -1 else 0)
    return sum_side(single(Fr(1, 2), Fr(1, 2) + e, sign=sign % 2,
                           num=d1((c, e, 1), (c, 2 - e, 2)),
                           den=d1((1, 2 * e + 1, 2), (1, 3, 3))))


def chern_rhs(c, e):
    return prod([(e + 1, 2, 1, c), (3 * e + 3, 6, 1, c), (2 * e + 1, 2, -1), (3, 6, -1)])


for name, c, e in (("chern-gen-q", 1, 1), ("chern-gen-q2", 1, 2), ("chern-gen-negq", -1, 1)):
    entry(name, "theorem", chern_side(c, e), chern_rhs(c, e), 120,
          f"cubic summation with free parameter at a = {'-' if c == -1 else ''}q^{e}")


def _mon(*parts):
    """Product of (coeff, exp) monomials raised to integer powers."""
    c, e = Fr(1), Fr(0)
    for (pc, pe), k in parts:
        c *= Fr(pc) ** k
        e += Fr(pe) * k
    return c, e


def _pf(mono_, step, r):
    c, e = mono_
    return (e, step, r, c)


Q = (1, 1)


def rahman_side(a, b):
    """Cubic summation; (1 - a q^(5n))/(1 - a) is written as (a;q^5)_(n+1)/((a;q^5)_n (a;q)_1)."""
    num = [
        poch(*a, 5, [1], 1),
        poch(*a, 2, [1]),
        poch(*b, 2, [1]),
        poch(*_mon((a, 1), (b, 2), (Q, -3)), 3, [1]),
        poch(*_mon((Q, 2), (b, -1)), 1, [1]),
        poch(*_mon((a, 1), (Q, 3), (b, -1)), 6, [1]),
    ]
    den = [
        poch(*a, 5, [1]),
        poch(*a, 1, [0], 1),
        poch(1, 3, 3, [1]),
        poch(*_mon((a, 1), (Q, 3), (b, -1)), 3, [1]),
        poch(*_mon((Q, 5), (b, -2)), 2, [1]),
        poch(*_mon((a, 1), (b, 1)), 4, [1]),
        poch(*_mon((a, 1), (b, 1), (Q, 2)), 4, [1]),
    ]
    rc, re_ = _mon((Q, 2), (b, -1))  # -q^2/b = -rc q^re_
    assert abs(rc) == 1, "unit coefficients only"
    t = single(Fr(1, 2), Fr(1, 2) + re_, sign=1 if rc > 0 else 0, num=num, den=den)
    rhs = prod([
        _pf(_mon((a, 1), (Q, 2)), 2, 1),
        _pf(_mon((Q, 3), (b, -1)), 2, 1),
        _pf(_mon((a, 1), (b, 2)), 6, 1),
        _pf(_mon((Q, 9), (b, -3)), 6, 1),
        _pf(_mon((a, 1), (b, 1)), 2, -1),
        _pf(_mon((Q, 5), (b, -2)), 2, -1),
        (3, 6, -1),
        _pf(_mon((a, 1), (Q, 6), (b, -1)), 6, -1),
    ])
    return sum_side(t), rhs


def rahman_a0_side(b, extra_sign=0):
    """The a = 0 specialisation (optionally with an extra (-1)^n)."""
    num = [poch(*_mon((Q, 2), (b, -1)), 1, [1]), poch(*b, 2, [1])]
    den = [poch(*_mon((Q, 5), (b, -2)), 2, [1]), poch(1, 3, 3, [1])]
    rc, re_ = _mon((Q, 2), (b, -1))
    sign = (1 if rc > 0 else 0) + extra_sign
    t = single(Fr(1, 2), Fr(1, 2) + re_, sign=sign % 2, num=num, den=den)
    rhs = prod([
        _pf(_mon((Q, 3), (b, -1)), 2, 1),
        _pf(_mon((Q, 9), (b, -3)), 6, 1),
        _pf(_mon((Q, 5), (b, -2)), 2, -1),
        (3, 6, -1),
    ])
    return sum_side(t), rhs


RAHMAN_PAIRS = [
    ("rahman-cubic", (1, 1), (1, 1)),
    ("rahman-cubic-a-q2-b-q", (1, 2), (1, 1)),
    ("rahman-cubic-a-q-b-negq", (1, 1), (-1, 1)),
    ("rahman-cubic-a-q3-b-q", (1, 3), (1, 1)),
    ("rahman-cubic-a-q2-b-neg1", (1, 2), (-1, 0)),
]
for eid, a, b in RAHMAN_PAIRS:
    lhs, rhs = rahman_side(a, b)
    entry(eid, "theorem", lhs, rhs, 80,
          f"cubic summation with (1-aq^(5n))/(1-a) weight at a={a}, b={b} as (coeff, exp)")
lhs, rhs = rahman_a0_side((1, 1))
entry("rahman-cubic-a0", "theorem", lhs, rhs, 80,
      "cubic summation at a = 0, b = q",
      notes="Sign convention taken from the a -> 0 limit; a variant with an extra (-1)^n "
            "fails at q^2 and contradicts the sign in the wang entry.")
lhs, rhs = rahman_a0_side((-1, 1))
entry("rahman-cubic-a0-b-negq", "theorem", lhs, rhs, 80, "cubic summation at a = 0, b = -q")

entry("au-conj", "theorem", sum_side(double_13([1, Fr(5, 2)])), inv_prod(6, [2, 3]), 120,
      "index (1,3): (-1)^j q^(3j(3j+1)/2+i^2+3ij+i+j) sum equals 1/(q^2,q^3;q^6)_inf")

entry("kr21", "theorem", sum_side(double_14([Fr(-1, 2), 0])), inv_prod(8, [1, 4, 7]), 120,
      "index (1,4): q^((3i^2-i)/2+4ij+4j^2) sum")
entry("kr22", "theorem", sum_side(double_14([Fr(3, 2), 4])), inv_prod(8, [3, 4, 5]), 120,
      "index (1,4): q^((3i^2+3i)/2+4ij+4j^2+4j) sum")
KR23 = sum_side(double_14([Fr(1, 2), 2]), double_14([Fr(5, 2), 6], const=1))
entry("kr23", "theorem", KR23, inv_prod(8, [1, 5, 6]), 120,
      "index (1,4): two-term sum with the factor (1+q^(2i+4j+1))")
entry("kr24", "theorem", sum_side(double_14([Fr(1, 2), 2])), inv_prod(8, [2, 3, 7]), 120,
      "index (1,4): q^((3i^2+i)/2+4ij+4j^2+2j) sum")

GOLL_NEW = sum_side(single(1, 1, num=[poch(-1, 1, 2, [1], 1)], den=slater_den))
entry("goll-new", "theorem", GOLL_NEW, inv_prod(8, [1, 5, 6]), 120,
      "q^(n^2+n)(-q;q^2)_(n+1)/(q^2;q^2)_n, same product as gollnitz22")

entry("conj-1-equivalent", "theorem", sum_side(triple_123(1, (1, 2, 4))),
      inv_prod(12, [1, 3, 4, 6, 7, 10, 11]), 80,
      "index (1,2,3) triple sum equivalent to the first modulus-12 quadruple sum")
entry("conj-2-equivalent", "theorem", sum_side(triple_123(1, (2, 4, 5))),
      inv_prod(12, [2, 3, 5, 6, 7, 8, 11]), 80,
      "index (1,2,3) triple sum equivalent to the second modulus-12 quadruple sum",
      notes="Linear part in j is j^2+4j; the variant j^2+j+4j fails at q^6.")

# -- conjectures -----------------------------------------------------------------

entry("kr-conj-1", "conjecture", sum_side(quad_F(1, 3, 6, 8)),
      inv_prod(12, [1, 3, 4, 6, 8, 9, 11]), 48, "quadruple sum F(q,q^3,q^6,q^8)")
entry("kr-conj-2", "conjecture", sum_side(quad_F(3, 5, 6, 12)),
      inv_prod(12, [3, 4, 5, 6, 7, 8, 9]), 48, "quadruple sum F(q^3,q^5,q^6,q^12)")
entry("kr-conj-3", "conjecture", sum_side(quad_F(2, 3, 5, 8)),
      inv_prod(12, [2, 3, 4, 5, 8, 9, 11]), 48, "quadruple sum F(q^2,q^3,q^5,q^8)")
entry("kr-conj-4", "conjecture",
      sum_side(quad_F(2, 3, 4, 8), quad_F(3, 5, 7, 10, pre=(1, 1)),
               quad_F(4, 7, 14, 10, pre=(1, 3)), quad_F(5, 9, 18, 13, pre=(-1, 7))),
      inv_prod(12, [1, 3, 4, 7, 8, 9, 10]), 48, "four-term combination of quadruple sums",
      notes="As transcribed this combination first disagrees with the product at q^16 "
            "(46 against 47); no permutation of the arguments or change of prefactor nearby repairs it.")
entry("conj-1", "conjecture", sum_side(quad_F(1, 3, 4, 6)),
      inv_prod(12, [1, 3, 4, 6, 7, 10, 11]), 48, "quadruple sum F(q,q^3,q^4,q^6)")
entry("conj-2", "conjecture", sum_side(quad_F(2, 5, 5, 10)),
      inv_prod(12, [2, 3, 5, 6, 7, 8, 11]), 48, "quadruple sum F(q^2,q^5,q^5,q^10)")

# -- proof steps: sums as constant terms --------------------------------------------

H = Fr(1, 2)
entry("f1-rep", "proof-step", sum_side(double_12([0, 0])),
      ct(zf("EulerNum", 1, 1), theta(1), zf("EulerDen", 1, 1, 2, 2)), 60,
      "u^i v^(2j) q^(i^2+2ij+2j^2-i-j) sum at (u,v)=(q,q^(1/2)) as a constant term")
entry("f1-rep-split", "proof-step", sum_side(double_12([0, 0])),
      ct(zf("EulerNum", 1, 1), theta(1), zf("EulerDen", 1, H), zf("EulerDen", -1, H)), 60,
      "same integrand with (v^2 z^2;q^2) split as (vz,-vz;q)")
entry("f1-rep-uz3", "proof-step", sum_side(double_12([0, 1])),
      ct(zf("EulerDen", -1, 1), theta(1)), 60,
      "the (q,q) instance, where (qz;q) merges into the theta factor")
entry("f2-rep", "proof-step", sum_side(double_12([1, 2])),
      ct(zf("EulerDen", -1, 2), zf("EulerNum", 1, 4, 1, 2), theta(2)), 60,
      "(-1)^i u^i v^j q^(i^2+2ij+2j^2-i-2j) sum at (u,v)=(-q^2,q^4) as a constant term")
entry("r-rep", "proof-step", sum_side(double_13([0, Fr(3, 2)])),
      ct(theta(1), zf("EulerDen", "w", 1), zf("EulerDen", "w^2", 1)), 60,
      "index (1,3) sum as constant term with w-twisted denominators",
      ring="eisenstein", omega_free=True)
entry("r-rep-cubic", "proof-step", sum_side(double_13([0, Fr(3, 2)])),
      ct(theta(1), zf("EulerNum", 1, 1), zf("EulerDen", 1, 3, 3, 3)), 60,
      "index (1,3) sum as constant term with (q^3 z^3;q^3) denominator")
entry("rbar-rep", "proof-step", sum_side(double_13([1, Fr(5, 2)])),
      ct(theta(1), zf("EulerNum", 1, 2), zf("EulerDen", 1, 4, 3, 3)), 60,
      "shifted index (1,3) sum as constant term with (q^4 z^3;q^3) denominator")
entry("rbar-rep-roots", "proof-step", sum_side(double_13([1, Fr(5, 2)])),
      ct(theta(1), zf("EulerNum", 1, 2),
         zf("EulerDen", 1, Fr(4, 3)), zf("EulerDen", "w", Fr(4, 3)), zf("EulerDen", "w^2", Fr(4, 3))),
      60, "same integrand with the cubic denominator split over cube roots of unity",
      ring="eisenstein", omega_free=True)
F14 = double_14([Fr(-1, 2), 0])
entry("f14-rep", "proof-step", sum_side(F14),
      ct(zf("EulerNum", 1, 1), theta(2), zf("EulerDen", 1, 2, 2, 4)), 60,
      "index (1,4) sum at (u,v)=(q,q^2) as a constant term")
entry("f14-rep-split", "proof-step", sum_side(F14),
      ct(zf("EulerNum", 1, 1, 1, 2), zf("EulerNum", 1, 2, 1, 2), theta(2),
         zf("EulerDen", 1, 1, 1, 2), zf("EulerDen", -1, 1, 1, 2)), 60,
      "same integrand with (uz;q) split as (uz,uqz;q^2)")
entry("qf1-rep", "proof-step", sum_side(quad_F(1, 3, 6, 8)), quad_F_factors(1, 3, 6, 8), 40,
      "quadruple sum F(q,q^3,q^6,q^8) as a constant term")

# -- proof steps: residue sums against constant terms --------------------------------


def gr_side(a, b, c, step=1):
    return mul(gr(a, b, c, step=step), prod([(step, step, 1)]))


entry("f1-gr", "proof-step", gr_side([Q, Q], [(1, 0)], [(1, H), (-1, H)]),
      ct(zf("EulerNum", 1, 1), theta(1), zf("EulerDen", 1, H), zf("EulerDen", -1, H)), 60,
      "residue sum for (A,B,C,D)=(2,1,2,0) against the constant term")
entry("f2-gr", "proof-step", gr_side([(1, 4), (1, 2)], [(1, 0)], [(-1, 2), (-1, 3)], step=2),
      ct(zf("EulerDen", -1, 2), zf("EulerNum", 1, 4, 1, 2), theta(2)), 60,
      "residue sum at base q^2 with c = (-q^2, -q^3)")
entry("r-gr", "proof-step", gr_side([Q], [(1, 0)], [("w", 1), ("w^2", 1)]),
      ct(theta(1), zf("EulerDen", "w", 1), zf("EulerDen", "w^2", 1)), 60,
      "residue sum with c = (wq, w^2 q)", ring="eisenstein", omega_free=True)
entry("rbar-gr", "proof-step",
      gr_side([(1, 2), Q], [(1, 0)], [(1, Fr(4, 3)), ("w", Fr(4, 3)), ("w^2", Fr(4, 3))]),
      ct(theta(1), zf("EulerNum", 1, 2), zf("EulerDen", 1, 4, 3, 3)), 60,
      "residue sum with c = (q^(4/3), w q^(4/3), w^2 q^(4/3))", ring="eisenstein", omega_free=True)

# -- proof steps: single-sum evaluations ----------------------------------------------

S1 = sum_side(single(0, 1, sign=1, num=d1((1, H, 1)), den=d1((1, 1, 1), (-1, 1, 1))))
S2 = sum_side(single(0, 1, sign=1, num=d1((-1, H, 1)), den=d1((1, 1, 1), (-1, 1, 1))))
entry("s1", "proof-step", subst(S1, 2), expr("f2*f6^2/(f3*f4^2)"), 120,
      "S1(q^2) as an eta quotient")
entry("s2", "proof-step", subst(S2, 2), expr("f2*f3*f12/(f4^2*f6)"), 120,
      "S2(q^2) as an eta quotient")
entry("s1-heine", "proof-step", subst(S1, 2),
      mul(prod([(2, 2, -1, -1)]),
          sum_side(single(1, 2, num=d1((-1, 1, 2)), den=d1((-1, 2, 2), (1, 2, 2))))), 120,
      "Heine transformation applied to S1(q^2)")
entry("s2-heine", "proof-step", subst(S2, 2),
      mul(prod([(2, 2, -1, -1)]),
          sum_side(single(1, 2, sign=1, num=d1((1, 1, 2)), den=d1((-1, 2, 2), (1, 2, 2))))), 120,
      "Heine transformation applied to S2(q^2)")
entry("f1-assembly", "proof-step", sum_side(double_12([0, 0])),
      mul(prod([(1, 1, 1)]),
          add(mul(prod([(H, 1, 3), (1, 1, -1), (0, 1, -1, -1)]), S1),
              mul(prod([(H, 1, 3, -1), (1, 1, -1), (0, 1, -1, -1)]), S2))), 60,
      "residue-sum output for the (q,q^(1/2)) integrand in terms of S1 and S2")
entry("f1-simplify", "proof-step",
      expr("f2*(f1^3/f3*f6^2/(f2^2*f4^3)+f3/f1^3*f2^7*f12/(f4^6*f6))/2"),
      expr("f6^2/(f2*f12)"), 120, "eta-quotient simplification after the dissection lemma")

T1 = sum_side(single(0, 1, num=d1((-1, 0, 2)), den=[poch(1, 1, 1, [2])]))
T2 = sum_side(single(0, 1, num=d1((-1, 1, 2)), den=[poch(1, 1, 1, [2], 1)]))
entry("t1", "proof-step", T1, expr("f2*f6^2/(f1^2*f12)"), 120, "(-1;q^2)_n q^n/(q;q)_(2n)")
entry("t2", "proof-step", T2, expr("f2*f3*f12/(f1^2*f6)"), 120, "(-q;q^2)_n q^n/(q;q)_(2n+1)")
entry("t1-heine", "proof-step", T1,
      mul(prod([(1, 2, -1)]),
          sum_side(single(1, 0, num=d1((-1, 1, 2)), den=d1((1, 1, 2), (1, 2, 2))))), 120,
      "Heine transformation applied to T1")
entry("t2-heine", "proof-step", T2,
      mul(prod([(1, 2, -1)]),
          sum_side(single(1, 1, num=d1((-1, 2, 2)), den=[poch(1, 1, 1, [2], 1)]))), 120,
      "Heine transformation applied to T2")
entry("f2-assembly", "proof-step", sum_side(double_12([1, 2])),
      mul(prod([(2, 2, 1)]),
          add(scale(mul(prod([(2, 2, 3, -1), (1, 1, -1)]), T1), 2),
              scale(mul(prod([(1, 2, 3, -1), (1, 1, -1)]), T2), -1))), 60,
      "residue-sum output for the (-q^2,q^4) integrand in terms of T1 and T2",
      notes="Carries the (q^2;q^2)_inf factor of the base-q^2 residue sum; without it the "
            "assembled value is f6^2/(f2^2 f3) rather than f6^2/(f2 f3).")
entry("f2-simplify", "proof-step",
      expr("2*f4^3*f6^2/(f1^3*f2^2*f12)-f2^7*f3*f12/(f1^6*f4^3*f6)"),
      expr("f6^2/(f2^2*f3)"), 120, "eta-quotient simplification after the dissection lemma",
      notes="Checks the eta-quotient algebra as stated without the (q^2;q^2)_inf factor (see f2-assembly).")

R1 = sum_side(single(H, H, sign=1, omega=1, den=d1((1, 1, 1), ("w^2", 1, 1))))
R2 = sum_side(single(H, H, sign=1, omega=2, den=d1((1, 1, 1), ("w", 1, 1))))
entry("r1-exp", "proof-step", R1, prod([(1, 1, 1, "w"), (2, 3, 1)]), 60,
      "(-w)^n q^(n(n+1)/2)/(q,w^2 q;q)_n = (wq;q)_inf (q^2;q^3)_inf", ring="eisenstein",
      omega_free=False)
entry("r2-exp", "proof-step", R2, prod([(1, 1, 1, "w^2"), (2, 3, 1)]), 60,
      "conjugate of r1-exp", ring="eisenstein", omega_free=False)
entry("r-assembly", "proof-step", sum_side(double_13([0, Fr(3, 2)])),
      add(mul(prod([(0, 1, 1, "w^2")]), expr("1/(1-w)"), R1),
          mul(prod([(0, 1, 1, "w")]), expr("1/(1-w^2)"), R2)), 60,
      "residue-sum output for the index (1,3) integrand in terms of R1 and R2",
      ring="eisenstein", omega_free=True)
entry("sills-6-1-11", "proof-step",
      sum_side(single(H, H, sign=1, omega=1, den=d1(("w^2", 1, 1), (1, 1, 1)))),
      mul(prod([(1, 1, 1, "w")]),
          sum_side(single(Fr(3, 2), H, sign=1,
                          den=d1((1, 1, 1), ("w^2", 1, 1), ("w", 1, 1))))), 60,
      "transformation q^(n(n-1)/2)(-b)^n/(a,q;q)_n at (a,b)=(w^2 q, wq)",
      ring="eisenstein", omega_free=False)
entry("r1-euler", "proof-step",
      sum_side(single(Fr(3, 2), H, sign=1, den=d1((1, 3, 3)))), prod([(2, 3, 1)]), 120,
      "(-1)^n q^((3n^2+n)/2)/(q^3;q^3)_n = (q^2;q^3)_inf")


def rbar_j(j):
    """sum (-1)^n (w^j q^(1/3);q)_n w^(jn) q^(n^2/2+5n/6)/(q,wq,w^2q;q)_n"""
    c = {0: 1, 1: "w", 2: "w^2"}[j]
    return sum_side(single(H, Fr(5, 6), sign=1, omega=j,
                           num=d1((c, Fr(1, 3), 1)),
                           den=d1((1, 1, 1), ("w", 1, 1), ("w^2", 1, 1))))


RB = [rbar_j(j) for j in range(3)]
RB_RHS = [
    prod([(4, 6, 1), (12, 18, 1), (5, 6, -1), (9, 18, -1)]),
    prod([(4, 6, 1, "w"), (12, 18, 1), (5, 6, -1, "w^2"), (9, 18, -1)]),
    prod([(4, 6, 1, "w^2"), (12, 18, 1), (5, 6, -1, "w"), (9, 18, -1)]),
]
for j in range(3):
    entry(f"rbar{j + 1}-exp", "proof-step", subst(RB[j], 3), RB_RHS[j], 60,
          f"the j={j} twisted single sum at q^3 as a product",
          ring="eisenstein" if j else "rational", omega_free=(j == 0))

T3 = Fr(1, 3)
entry("rbar-eval-key", "proof-step", sum_side(double_13([1, Fr(5, 2)])),
      scale(mul(expr("f1/f3"),
                add(mul(prod([(T3, 1, 1), (2 * T3, 1, 2)]), RB[0]),
                    scale(mul(prod([(T3, 1, 1, "w"), (2 * T3, 1, 2, "w^2")]), RB[1]), "w^2"),
                    scale(mul(prod([(T3, 1, 1, "w^2"), (2 * T3, 1, 2, "w")]), RB[2]), "w"))),
            Fr(-1, 3), -T3), 60,
      "residue-sum evaluation of the shifted index (1,3) sum, assembled from three twisted sums",
      ring="eisenstein", omega_free=True)

W = prod([(1, 1, 1), (2, 2, 1), (3, 3, -1), (6, 6, -1)], pre=(1, -1))
entry("w-def", "proof-step",
      prod([(1, 3, 1), (2, 3, 2), (4, 6, 1), (5, 6, -1)], pre=(1, -1)),
      expr("f1*f2/(q*f3*f6)"), 120, "two product forms of W")
entry("w-dissection", "proof-step", add(W, root(W, 1), root(W, 2)),
      scale(extract(W, 0, 3), 3), 120,
      "W(q)+W(wq)+W(w^2q) keeps the exponents divisible by 3",
      ring="eisenstein", omega_free=True)
entry("w-extract", "proof-step",
      scale(mul(expr("f3/f9"), prod([(12, 18, 1), (9, 18, -1)]), extract(W, 0, 3)), -1),
      prod([(12, 18, 1), (18, 18, 1), (9, 18, -1), (6, 6, -1)]), 120,
      "the 3-dissection component of W closes the shifted index (1,3) evaluation")
entry("au-conj-assembled", "proof-step", subst(sum_side(double_13([1, Fr(5, 2)])), 3),
      scale(mul(expr("f3/f9"), prod([(12, 18, 1), (9, 18, -1)]),
                add(W, root(W, 1), root(W, 2))), Fr(-1, 3)), 60,
      "shifted index (1,3) sum at q^3 from the three W twists", ring="eisenstein",
      omega_free=True)
nu3 = subst({"kind": "cubic_cf", "depth": None}, 3)
entry("chan-cubic", "proof-step",
      add(power(nu3, -1), expr("-1"), scale(nu3, -2)),
      expr("f1*f2/(q*f9*f18)"), 60, "cubic continued fraction identity at q^3")

# -- proof steps: index (1,4) reductions -----------------------------------------------

for t in (1, 2, 3, 4):
    entry(f"fx-reduction-x-q{t}", "proof-step",
          sum_side(double_14([Fr(-3, 2) + t, -2 + 2 * t])),
          sum_side(single(1, t - 1, num=d1((-1, 1, 2)), den=slater_den)), 120,
          f"double sum F(x,x^2) reduced to a single sum at x = q^{t}")
entry("kr23-intermediate", "proof-step", KR23,
      mul(expr("1+q"), sum_side(single(1, 1, num=d1((-1, 3, 2)), den=slater_den))), 120,
      "two-term index (1,4) sum as (1+q) times a single sum")
entry("kr23-lebesgue", "proof-step",
      sum_side(single(1, 1, num=d1((-1, 3, 2)), den=slater_den)),
      prod([(5, 4, 1, -1), (2, 2, 1, -1)]), 120,
      "Lebesgue's identity at (a,q) -> (-q^3,q^2), after removing the (1+q) factor")
entry("goll-new-vs-gollnitz22", "proof-step", GOLL_NEW,
      sum_side(single(1, 1, num=d1((-1, -1, 2)), den=slater_den)), 120,
      "two different sum sides with the same product")
entry("dissect-1", "proof-step", expr("f3/f1^3"),
      expr("f4^6*f6^3/(f2^9*f12^2)+3*q*f4^2*f6*f12^2/f2^7"), 120,
      "2-dissection of f3/f1^3")
entry("dissect-2", "proof-step", expr("f1^3/f3"),
      expr("f4^3/f12-3*q*f2^2*f12^3/(f4*f6^2)"), 120, "2-dissection of f1^3/f3")


def main():
    ids = [e["id"] for e in ENTRIES]
    assert len(ids) == len(set(ids)), "duplicate ids"
    OUT.parent.mkdir(parents=True, exist_ok=True)
    ENTRIES.sort(key=lambda e: e["id"])
    OUT.write_text(json.dumps(ENTRIES, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(ENTRIES)} entries to {OUT}")


if __name__ == "__main__":
    main()
