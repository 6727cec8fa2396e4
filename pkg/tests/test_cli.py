import io
import json
import subprocess
import sys

import pytest

from toeplitz_fredholm.cli import main, parse_range

BESSEL = ["--preset", "bessel", "--theta", "1"]
HYPER = ["--preset", "hypergeometric", "--z", "2", "--zprime", "3", "--xi", "0.4"]


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_parse_range():
    assert parse_range("1..4") == [1, 2, 3, 4]
    assert parse_range("7") == [7]


def test_verify_bessel_all():
    code, text = run("verify", *BESSEL, "--n", "1..10", "--method", "all", "--out", "json")
    assert code == 0
    rep = json.loads(text)
    assert rep["schema"] == 1 and rep["status"] == "PASS"
    assert len(rep["rows"]) == 30
    assert max(r["rel_err"] for r in rep["rows"]) <= 1e-10


def test_verify_zero_symbol(tmp_path):
    f = tmp_path / "zero.json"
    f.write_text(json.dumps({"vplus": [], "vminus": [], "r": "entire"}))
    code, text = run("verify", "--symbol", str(f), "--n", "1..3", "--out", "json")
    assert code == 0
    for r in json.loads(text)["rows"]:
        assert r["lhs"] == [1.0, 0.0] and r["rhs"] == [1.0, 0.0]


def test_verify_hypergeometric_tsv():
    code, text = run("verify", *HYPER, "--n", "1..8")
    assert code == 0
    lines = text.strip().split("\n")
    header = lines[0].split("\t")
    assert header[:4] == ["n", "method", "lhs_re", "lhs_im"]
    Z = float(lines[1].split("\t")[header.index("Z_re")])
    assert abs(Z - 0.84 ** -6) <= 1e-14 * Z
    assert all(float(l.split("\t")[header.index("rel_err")]) <= 1e-9 for l in lines[1:])


def test_verify_exit_code_on_failure():
    code, text = run("verify", *HYPER, "--n", "1..4", "--rel-tol", "1e-30", "--out", "json")
    rep = json.loads(text)
    assert any(r["rel_err"] > 1e-30 for r in rep["rows"])
    assert code == 1 and rep["status"] == "FAIL"


def test_szego():
    code, text = run("szego", "--preset", "charlier", "--kappa", "2", "--theta", "0.5",
                     "--n", "1..15", "--out", "json")
    assert code == 0
    rows = json.loads(text)["rows"]
    assert rows[0]["ratio"] is None
    assert rows[-1]["gap"] < 1e-12 * 10


def test_szego_zero(tmp_path):
    f = tmp_path / "zero.json"
    f.write_text("{}")
    code, text = run("szego", "--symbol", str(f), "--n", "1..4", "--out", "json")
    assert all(r["gap"] == 0 for r in json.loads(text)["rows"])


def test_kernel_bessel():
    code, text = run("kernel", *BESSEL, "--method", "all", "--i", "0..5", "--j", "0..5",
                     "--out", "json")
    rep = json.loads(text)
    assert code == 0 and rep["status"] == "PASS"
    assert rep["max_deviation"]["series|closed-form"] <= 1e-12
    assert len(rep["entries"]) == 36


def test_kernel_zero(tmp_path):
    f = tmp_path / "zero.json"
    f.write_text("{}")
    code, text = run("kernel", "--symbol", str(f), "--method", "all", "--i", "0..2", "--j", "0..2",
                     "--out", "json")
    rep = json.loads(text)
    assert code == 0
    assert all(v == [0.0, 0.0] for e in rep["entries"] for v in e["values"].values())


def test_kernel_adjudication():
    code, text = run("kernel", *HYPER, "--method", "all", "--i", "0..3", "--j", "0..3")
    assert code == 0
    assert "# reading_selected\ti+1" in text
    code, text = run("kernel", "--preset", "charlier", "--kappa", "2", "--theta", "0.5",
                     "--method", "all", "--out", "json")
    assert json.loads(text)["readings"]["selected"] == "with theta**(i+j+2)"


def test_kernel_complex_parameter():
    code, text = run("kernel", "--preset", "hypergeometric", "--z", "0.8", "--zprime", "1+1j",
                     "--xi", "0.5", "--method", "all", "--out", "json")
    assert code == 0


def test_exact():
    code, text = run("exact", "--n", "2", "--degree", "6", "--out", "json")
    rep = json.loads(text)
    assert code == 0 and rep["status"] == "PASS"
    assert all(r["difference_terms"] == [] for r in rep["reports"])
    code, text = run("exact", "--n", "4", "--degree", "6")
    assert code == 0 and "szego\td=6,n=4\tPASS" in text
    code, _ = run("exact", "--n", "1..3", "--degree", "0")
    assert code == 0


def test_exact_correlation_and_locality():
    code, text = run("exact", "--n", "2", "--degree", "6", "--checks", "correlation,locality",
                     "--X=-1,2", "--X", "0")
    assert code == 0
    assert text.count("PASS") == 4


def test_degree_guard():
    code, _ = run("exact", "--n", "1", "--degree", "13")
    assert code == 2


def test_preset_missing_parameter():
    with pytest.raises(SystemExit):
        run("verify", "--preset", "charlier", "--theta", "0.5")


def test_domain_error_exit():
    code, _ = run("verify", "--preset", "charlier", "--kappa", "1", "--theta", "1.5")
    assert code == 2


def test_deterministic():
    argv = ("verify", *HYPER, "--n", "1..4", "--method", "all")
    assert run(*argv) == run(*argv)


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "toeplitz_fredholm.cli", "verify", *BESSEL,
                           "--n", "1..3"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("n\tmethod")
