import copy
import json

import pytest

from qrr.catalog import (
    CatalogError, UnknownIdError, default_catalog_path, eval_side, get_entry, list_entries,
    load_catalog, verify, verify_all,
)
from qrr.multisum import eval_sum_term

CATALOG = json.loads(open(default_catalog_path(), encoding="utf-8").read())
KNOWN_FALSE = {"kr-conj-4"}


def raw(eid):
    return copy.deepcopy(next(d for d in CATALOG if d["id"] == eid))


def write_catalog(tmp_path, entries, name="catalog.json"):
    p = tmp_path / name
    p.write_text(json.dumps(entries), encoding="utf-8")
    return str(p)


def test_catalog_is_sorted_and_unique():
    ids = [e.id for e in load_catalog()]
    assert ids == sorted(ids) and len(ids) == len(set(ids))
    assert sum(e.status == "theorem" for e in load_catalog()) >= 35


def test_required_ids_present():
    ids = {e.id for e in load_catalog()}
    required = {"rr1", "rr2", "slater34", "slater36", "gollnitz22", "gollnitz24", "kr-triple-1",
                "kr-triple-2", "akkk", "takigiku", "slater81", "andrews-double", "uz1", "uz2", "uz3",
                "rama1", "rama2", "rama3", "au", "au-rr", "wang", "rahman-cubic", "au-conj", "kr21",
                "kr22", "kr23", "kr24", "goll-new", "conj-1-equivalent", "conj-2-equivalent",
                "kr-conj-1", "kr-conj-2", "kr-conj-3", "kr-conj-4", "conj-1", "conj-2",
                "r-rep", "r1-exp", "rbar1-exp", "rbar2-exp", "rbar3-exp", "w-dissection",
                "chan-cubic", "f1-rep", "f2-rep", "rbar-rep", "f14-rep", "qf1-rep"}
    assert required <= ids
    assert {f"ag-k{k}-i{i}" for k in (2, 3, 4) for i in range(1, k + 1)} <= ids


@pytest.mark.parametrize("eid", [e.id for e in load_catalog() if e.id not in KNOWN_FALSE])
def test_entry_passes_at_default_order(eid):
    r = verify(eid)
    assert r.passed, r.line()


def test_transcribed_four_term_conjecture_fails_at_q16():
    r = verify("kr-conj-4")
    assert not r.passed
    e, lhs, rhs = r.first_mismatch
    assert (e, lhs.re, rhs.re) == (16, 46, 47)


def test_id_normalisation():
    assert get_entry("kr_conj_1").id == "kr-conj-1"
    assert get_entry("RR1").id == "rr1"
    with pytest.raises(UnknownIdError):
        get_entry("no-such-identity")


def test_conjecture_claim_wording():
    r = verify("kr_conj_1", 48)
    assert r.passed and r.status == "conjecture"
    assert r.claim() == "verified to order 48 (conjecture)"
    assert "proved" not in r.line()


def test_andrews_gordon_k2_is_rogers_ramanujan():
    for i, rr in ((1, "rr2"), (2, "rr1")):
        ag = get_entry(f"ag-k2-i{i}").lhs.payload.terms[0]
        other = get_entry(rr).lhs.payload.terms[0]
        assert (ag.quad, ag.lin) == (other.quad, other.lin)
        assert eval_sum_term(ag, 100) == eval_sum_term(other, 100)


def test_omega_free_entries_are_rational():
    hits = 0
    for e in load_catalog():
        if e.ring == "eisenstein" and e.omega_free:
            assert eval_side(e.lhs, 30).is_rational(), e.id
            hits += 1
    assert hits >= 5


def test_assembled_series_has_no_omega_part():
    s = eval_side(get_entry("au-conj-assembled").rhs, 60)
    assert s.om is None or not any(s.om)


def test_runner_is_deterministic():
    a = verify_all(order=30, jobs=1)
    b = verify_all(order=30, jobs=3)
    strip = lambda rs: [{k: v for k, v in r.to_json().items() if k != "ms"} for r in rs]  # noqa: E731
    assert strip(a) == strip(b)
    assert [r.id for r in a] == sorted(r.id for r in a)


def test_report_json_shape():
    doc = verify("rr1", 20).to_json()
    assert set(doc) >= {"id", "order", "verdict", "first_mismatch", "ms"}
    assert doc["verdict"] == "pass" and doc["first_mismatch"] is None


def test_empty_filter(tmp_path):
    path = write_catalog(tmp_path, [raw("rr1")])
    assert verify_all(status="conjecture", path=path) == []


def test_bad_status_filter():
    with pytest.raises(ValueError):
        verify_all(status="lemma")


# -- negative controls ----------------------------------------------------------------

def corrupted_catalog(tmp_path):
    product = raw("uz1")
    product["id"] = "uz1-corrupted"
    assert product["rhs"]["kind"] == "expr"
    product["rhs"] = {"kind": "product", "prefactor": {"coeff": "1", "exp": "0"},
                      "factors": [{"a": "1", "m": "6", "r": -1}, {"a": "2", "m": "6", "r": -1},
                                  {"a": "3", "m": "6", "r": 1}, {"a": "4", "m": "6", "r": -1},
                                  {"a": "5", "m": "6", "r": 0}]}
    quad = raw("uz1")
    quad["id"] = "uz1-quad-corrupted"
    quad["lhs"]["terms"][0]["quad"][1][1] = "3"
    return write_catalog(tmp_path, [product, quad, raw("uz1")])


def test_perturbed_product_fails_at_located_exponent(tmp_path):
    path = corrupted_catalog(tmp_path)
    r = verify("uz1-corrupted", 100, path)
    assert not r.passed
    e, lhs, rhs = r.first_mismatch
    assert e == 5 and lhs != rhs


def test_perturbed_quadratic_form_fails(tmp_path):
    path = corrupted_catalog(tmp_path)
    r = verify("uz1-quad-corrupted", 100, path)
    assert not r.passed and r.first_mismatch[0] < 100
    assert verify("uz1", 100, path).passed


def test_evaluation_error_becomes_failing_report(tmp_path):
    d = raw("rr1")
    d["rhs"] = {"kind": "expr", "expr": "1/(f1-f1)"}
    path = write_catalog(tmp_path, [d])
    r = verify("rr1", 10, path)
    assert not r.passed and "ExprEvalError" in r.reason


# -- malformed files --------------------------------------------------------------------

@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.pop("lhs"), "missing field 'lhs'"),
    (lambda d: d.update(status="lemma"), "status"),
    (lambda d: d.update(ring="gaussian"), "ring"),
    (lambda d: d.update(default_order=0), "default_order"),
    (lambda d: d.update(rhs={"kind": "mystery"}), "unknown"),
])
def test_malformed_entries(tmp_path, mutate, message):
    d = raw("rr1")
    mutate(d)
    with pytest.raises(CatalogError, match=message):
        load_catalog(write_catalog(tmp_path, [d]))


def test_duplicate_ids(tmp_path):
    with pytest.raises(CatalogError, match="duplicate"):
        load_catalog(write_catalog(tmp_path, [raw("rr1"), raw("rr1")]))


def test_catalog_must_be_array(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{}", encoding="utf-8")
    with pytest.raises(CatalogError):
        load_catalog(str(p))


def test_list_entries():
    rows = list_entries()
    assert ("rr1", "theorem") == rows[[r[0] for r in rows].index("rr1")][:2]
