import io
import json
import subprocess
import sys

import pytest

from qrr.cli import run
from test_catalog import corrupted_catalog


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_verify_pass():
    code, text = call("verify", "--id", "rr1", "--order", "50")
    assert code == 0 and "pass" in text


def test_verify_json_line():
    code, text = call("verify", "--id", "uz1", "--order", "40", "--json")
    doc = json.loads(text)
    assert code == 0
    assert doc["id"] == "uz1" and doc["verdict"] == "pass" and doc["first_mismatch"] is None
    assert isinstance(doc["ms"], float)


def test_verify_mismatch_exit_code(tmp_path, monkeypatch):
    monkeypatch.setenv("QRR_CATALOG", corrupted_catalog(tmp_path))
    code, text = call("verify", "--id", "uz1-corrupted", "--order", "60", "--json")
    doc = json.loads(text)
    assert code == 1 and doc["verdict"] == "fail"
    assert doc["first_mismatch"]["exp_num"] == 5 and doc["first_mismatch"]["exp_den"] == 1
    code, _ = call("verify", "--id", "uz1-quad-corrupted", "--order", "60")
    assert code == 1


def test_verify_all_filtered(tmp_path, monkeypatch):
    monkeypatch.setenv("QRR_CATALOG", corrupted_catalog(tmp_path))
    code, text = call("verify-all", "--order", "30", "--json", "--jobs", "2")
    lines = [json.loads(x) for x in text.splitlines()]
    assert [d["id"] for d in lines] == ["uz1", "uz1-corrupted", "uz1-quad-corrupted"]
    assert code == 1


def test_verify_all_conjectures_reports_status():
    # below q^16 every transcribed conjecture still agrees
    code, text = call("verify-all", "--status", "conjecture", "--order", "15")
    assert text.count("(conjecture)") == 6 and code == 0


def test_expand():
    code, text = call("expand", "--expr", "1/P(q;q^5)_inf/P(q^4;q^5)_inf", "--order", "9")
    assert code == 0
    assert text.strip() == "1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6 + 3*q^7 + 4*q^8 + O(q^9)"


def test_prodfit_classifies():
    code, text = call("prodfit", "--expr", "f3^2/(f1*f6)", "--order", "61", "--modulus", "6")
    doc = json.loads(text)
    assert code == 0 and doc["N"] == 60 and doc["exponents"][:6] == [1, 1, -1, 1, 1, 0]
    assert doc["classified"][2] == {"a": 3, "m": 6, "r": 1}


def test_prodfit_wrong_modulus():
    code, text = call("prodfit", "--expr", "f3^2/(f1*f6)", "--order", "40", "--modulus", "5")
    assert code == 1 and json.loads(text)["classified"] is None


@pytest.mark.parametrize("argv", [
    ("expand", "--expr", "P(q;q)_inf +", "--order", "5"),
    ("verify", "--id", "nope"),
    ("verify", "--id", "rr1", "--order", "-3"),
    ("frobnicate",),
    (),
    ("expand", "--expr", "1/(f1-f1)", "--order", "5"),
])
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2


def test_syntax_error_message(capsys):
    call("expand", "--expr", "P(q;q)_inf +", "--order", "5")
    assert "byte 12" in capsys.readouterr().err


def test_list():
    code, text = call("list")
    assert code == 0 and text.splitlines()[0].split()[0] == "ag-k2-i1"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qrr.cli", "verify", "--id", "rr2", "--order", "30"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "rr2" in proc.stdout
