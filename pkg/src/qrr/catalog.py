"""Identity registry and verification runner.

The registry is a JSON array of entries, each pairing two *sides*. A side
is a JSON object whose ``kind`` selects one of:

``sum``       multi-sum terms (see :mod:`qrr.multisum`)
``ct``        constant term of a product of z-factors
``gr``        residue-sum evaluation of a contour integral
``product``   ``prefactor * prod (coeff q^a; q^m)_inf^r``
``expr``      a DSL expression (see :mod:`qrr.expr`)
``add``, ``mul``            sums and products of sides
``pow``       integer power of a side
``scale``     monomial times a side
``subst``     ``q -> q^power``
``root``      ``q -> w^j q``
``extract``   keep exponents congruent to ``residue`` mod ``modulus``
``cubic_cf``  the cubic continued fraction

Entries are loaded and validated once; evaluation is pure, so
:func:`verify_all` can fan out over processes.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional

from qrr.coeffring import as_er, format_er
from qrr.ctengine import GRSpec, ZFactor, ct_product, gr_rhs
from qrr.expr import eval_expr, parse_expr
from qrr.multisum import SumSide, SumTerm, eval_sum_side, mono_from_json
from qrr.products import ProductFactor, ProductSide, cubic_cf
from qrr.series import QSeries

__all__ = [
    "CatalogError",
    "UnknownIdError",
    "Side",
    "IdentityEntry",
    "Report",
    "load_catalog",
    "default_catalog_path",
    "parse_side",
    "eval_side",
    "get_entry",
    "verify",
    "verify_entry",
    "verify_all",
    "list_entries",
]

STATUSES = ("theorem", "proof-step", "conjecture")
RINGS = ("rational", "eisenstein")
_COMBINATORS = ("add", "mul", "pow", "scale", "subst", "root", "extract")
SIDE_KINDS = ("sum", "ct", "gr", "product", "expr", "cubic_cf") + _COMBINATORS


class CatalogError(ValueError):
    """The catalog file or one of its entries is malformed."""


class UnknownIdError(KeyError):
    pass


@dataclass(frozen=True)
class Side:
    kind: str
    payload: object = None
    children: tuple = ()
    params: tuple = ()

    def param(self, name, default=None):
        return dict(self.params).get(name, default)


def _need(d, key, where):
    if key not in d:
        raise CatalogError(f"{where}: missing field {key!r}")
    return d[key]


def parse_side(d: dict, where: str = "side") -> Side:
    """Validate and convert one JSON side."""
    if not isinstance(d, dict):
        raise CatalogError(f"{where}: a side must be an object")
    kind = _need(d, "kind", where)
    if kind not in SIDE_KINDS:
        raise CatalogError(f"{where}: unknown side kind {kind!r}")
    try:
        if kind == "sum":
            terms = d["terms"] if "terms" in d else [d]
            return Side(kind, SumSide(tuple(SumTerm.from_json(t) for t in terms)))
        if kind == "ct":
            return Side(kind, tuple(ZFactor.from_json(f) for f in _need(d, "factors", where)))
        if kind == "gr":
            return Side(kind, GRSpec.from_json(d))
        if kind == "product":
            pre = mono_from_json(d.get("prefactor", {"coeff": "1", "exp": "0"}))
            factors = tuple(
                ProductFactor(Fraction(f["a"]), Fraction(f["m"]), int(f["r"]),
                              as_er(str(f.get("coeff", "1"))))
                for f in _need(d, "factors", where))
            for f in factors:
                if f.m <= 0:
                    raise CatalogError(f"{where}: product step must be positive")
            return Side(kind, ProductSide(factors, pre))
        if kind == "expr":
            text = _need(d, "expr", where)
            return Side(kind, (text, parse_expr(text)))
        if kind == "cubic_cf":
            return Side(kind, params=(("depth", d.get("depth")),))
        if kind in ("add", "mul"):
            kids = tuple(parse_side(t, f"{where}.{kind}[{i}]")
                         for i, t in enumerate(_need(d, "terms", where)))
            if not kids:
                raise CatalogError(f"{where}: {kind} needs at least one term")
            return Side(kind, children=kids)
        if kind == "pow":
            return Side(kind, children=(parse_side(_need(d, "base", where), where + ".base"),),
                        params=(("k", int(_need(d, "k", where))),))
        inner = parse_side(_need(d, "side", where), f"{where}.{kind}")
        if kind == "scale":
            return Side(kind, mono_from_json(d), (inner,))
        if kind == "subst":
            p = Fraction(str(_need(d, "power", where)))
            if p <= 0:
                raise CatalogError(f"{where}: substitution power must be positive")
            return Side(kind, children=(inner,), params=(("power", p),))
        if kind == "root":
            return Side(kind, children=(inner,), params=(("j", int(_need(d, "j", where))),))
        if kind == "extract":
            return Side(kind, children=(inner,),
                        params=(("residue", int(_need(d, "residue", where))),
                                ("modulus", int(_need(d, "modulus", where)))))
    except CatalogError:
        raise
    except (ValueError, TypeError, KeyError) as exc:
        raise CatalogError(f"{where}: {exc}") from exc
    raise CatalogError(f"{where}: unknown side kind {kind!r}")


def _eval(side: Side, order: Fraction) -> QSeries:
    k = side.kind
    if k == "sum":
        return eval_sum_side(side.payload, order)
    if k == "ct":
        return ct_product(side.payload, order)
    if k == "gr":
        return gr_rhs(side.payload, order)
    if k == "product":
        return side.payload.evaluate(order)
    if k == "expr":
        return eval_expr(side.payload[1], order, source=side.payload[0])
    if k == "cubic_cf":
        return cubic_cf(side.param("depth"), order)
    if k == "add":
        out = _eval(side.children[0], order)
        for c in side.children[1:]:
            out = out + _eval(c, order)
        return out
    if k == "mul":
        out = _eval(side.children[0], order)
        for c in side.children[1:]:
            out = out * _eval(c, order)
        return out
    inner = side.children[0]
    if k == "pow":
        return _eval(inner, order) ** side.param("k")
    if k == "scale":
        m = side.payload
        return _eval(inner, order - m.exp).scale_by(m.coeff).shift(m.exp)
    if k == "subst":
        p = side.param("power")
        return _eval(inner, order / p).subst_power(p)
    if k == "root":
        return _eval(inner, order).subst_unit_root(side.param("j"))
    if k == "extract":
        return _eval(inner, order).extract(side.param("residue"), side.param("modulus"))
    raise CatalogError(f"unknown side kind {k!r}")


def eval_side(side: Side, order, *, max_boost=None) -> QSeries:
    """Evaluate ``side`` to a series known below ``order``.

    Laurent factors cost precision in products; the evaluation is retried
    at a higher working order until the requested order is reached.
    """
    order = Fraction(order)
    limit = order if max_boost is None else Fraction(max_boost)
    extra = Fraction(0)
    while True:
        out = _eval(side, order + extra)
        if out.order >= order:
            return out.truncate(order)
        short = order - out.order
        if extra + short > limit:
            raise ArithmeticError(f"precision loss exceeds boost limit at order {order}")
        extra += short


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    status: str
    lhs: Side
    rhs: Side
    default_order: int
    ring: str = "rational"
    omega_free: bool = False
    description: str = ""
    notes: str = ""


@dataclass
class Report:
    id: str
    order: int
    verdict: str
    first_mismatch: Optional[tuple] = None  # (exponent, lhs coeff, rhs coeff)
    ms: float = 0.0
    status: str = ""
    reason: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def claim(self) -> str:
        if not self.passed:
            return "fail"
        if self.status == "conjecture":
            return f"verified to order {self.order} (conjecture)"
        return "pass"

    def to_json(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            e, a, b = self.first_mismatch
            mm = {"exp_num": e.numerator, "exp_den": e.denominator,
                  "lhs": format_er(a), "rhs": format_er(b)}
        out = {"id": self.id, "order": self.order, "verdict": self.verdict,
               "first_mismatch": mm, "ms": round(self.ms, 3)}
        if self.status:
            out["status"] = self.status
        if self.reason:
            out["reason"] = self.reason
        return out

    def line(self) -> str:
        head = f"{self.id:<28} order {self.order:<4} {self.claim():<34} {self.ms:9.1f} ms"
        if self.first_mismatch is not None:
            e, a, b = self.first_mismatch
            head += f"  first mismatch at q^{e}: lhs {format_er(a)}, rhs {format_er(b)}"
        if self.reason:
            head += f"  ({self.reason})"
        return head


def parse_entry(d: dict) -> IdentityEntry:
    where = f"entry {d.get('id', '?')!r}"
    eid = _need(d, "id", where)
    status = _need(d, "status", where)
    if status not in STATUSES:
        raise CatalogError(f"{where}: status must be one of {STATUSES}")
    ring = d.get("ring", "rational")
    if ring not in RINGS:
        raise CatalogError(f"{where}: ring must be one of {RINGS}")
    order = int(_need(d, "default_order", where))
    if order <= 0:
        raise CatalogError(f"{where}: default_order must be positive")
    return IdentityEntry(
        id=eid,
        status=status,
        lhs=parse_side(_need(d, "lhs", where), f"{eid}.lhs"),
        rhs=parse_side(_need(d, "rhs", where), f"{eid}.rhs"),
        default_order=order,
        ring=ring,
        omega_free=bool(d.get("omega_free", ring == "rational")),
        description=d.get("description", ""),
        notes=d.get("notes", ""),
    )


def default_catalog_path() -> str:
    env = os.environ.get("QRR_CATALOG")
    if env:
        return env
    return str(resources.files("qrr") / "data" / "catalog.json")


@lru_cache(maxsize=8)
def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise CatalogError("catalog must be a JSON array of entries")
    entries = [parse_entry(d) for d in raw]
    seen = set()
    for e in entries:
        if e.id in seen:
            raise CatalogError(f"duplicate id {e.id!r}")
        seen.add(e.id)
    return tuple(sorted(entries, key=lambda e: e.id))


def load_catalog(path: Optional[str] = None):
    return _load(path or default_catalog_path())


def _norm_id(s: str) -> str:
    return s.strip().lower().replace("_", "-")


def get_entry(eid: str, path: Optional[str] = None) -> IdentityEntry:
    want = _norm_id(eid)
    for e in load_catalog(path):
        if _norm_id(e.id) == want:
            return e
    raise UnknownIdError(eid)


def list_entries(path: Optional[str] = None):
    return [(e.id, e.status, e.description) for e in load_catalog(path)]


def verify_entry(entry: IdentityEntry, order=None) -> Report:
    order = entry.default_order if order is None else int(order)
    t0 = time.perf_counter()
    report = Report(entry.id, order, "pass", status=entry.status)
    try:
        lhs = eval_side(entry.lhs, order)
        rhs = eval_side(entry.rhs, order)
        mm = lhs.first_mismatch(rhs)
        if mm is not None:
            report.verdict = "fail"
            report.first_mismatch = mm
        elif entry.ring == "rational" and not (lhs.is_rational() and rhs.is_rational()):
            report.verdict = "fail"
            report.reason = "rational entry produced a coefficient outside Q"
        elif entry.omega_free and not lhs.is_rational():
            report.verdict = "fail"
            report.reason = "w-free statement produced a coefficient with nonzero w part"
    except Exception as exc:  # evaluation errors become failing reports
        report.verdict = "fail"
        report.reason = f"{type(exc).__name__}: {exc}"
    report.ms = (time.perf_counter() - t0) * 1000
    return report


def verify(eid: str, order=None, path: Optional[str] = None) -> Report:
    return verify_entry(get_entry(eid, path), order)


def _verify_job(args):
    eid, order, path = args
    return verify(eid, order, path)


def verify_all(status: Optional[str] = None, order=None, jobs: int = 1,
               path: Optional[str] = None):
    """Reports for every entry with the given status, ordered by id."""
    if status is not None and status not in STATUSES:
        raise ValueError(f"status must be one of {STATUSES}")
    entries = [e for e in load_catalog(path) if status is None or e.status == status]
    if jobs <= 1 or len(entries) <= 1:
        reports = [verify_entry(e, order) for e in entries]
    else:
        work = [(e.id, order, path) for e in entries]
        # biggest entries first keeps the pool busy
        work.sort(key=lambda w: -get_entry(w[0], path).default_order)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_job, work))
    return sorted(reports, key=lambda r: r.id)
