import csv
import io
import json
import subprocess
import sys

import pytest

from dyckarea import cli, genfun
from dyckarea.genfun import BRACKET
from dyckarea.polyring import B, TSeries, parse_poly as P


def run(capsys, *argv):
    status = cli.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_table_text(capsys):
    status, out, _ = run(capsys, "table", "--height", "1", "--order", "2", "--method", "cf")
    assert status == 0
    assert out.splitlines() == ["t^0: 1", "t^1: a*b", "t^2: a^2*b^2"]


def test_table_brute_json(capsys):
    status, out, _ = run(capsys, "table", "--height", "2", "--order", "2", "--method", "brute",
                         "--format", "json")
    doc = json.loads(out)
    assert status == 0
    assert (doc["height"], doc["order"], doc["method"]) == (2, 2, "brute")
    rows = [(r["t"], r["a"], r["b"], r["q"], r["coeff"]) for r in doc["terms"]]
    assert rows == [(0, 0, 0, 0, "1"), (1, 1, 0, 0, "1"), (2, 1, 1, 1, "1"), (2, 2, 0, 0, "1")]


def test_table_theorem_at_height_zero(capsys):
    # the closed ratio at h=0 evaluates to 1 (enumeration gives b)
    status, out, _ = run(capsys, "table", "--height", "0", "--order", "1", "--method", "theorem",
                         "--format", "csv")
    assert status == 0
    assert out.splitlines() == ["t,a,b,q,coeff", "0,0,0,0,1"]
    status, out, _ = run(capsys, "table", "--height", "0", "--order", "1", "--method", "cf",
                         "--format", "csv")
    assert out.splitlines() == ["t,a,b,q,coeff", "0,0,1,0,1"]


def test_default_method_is_theorem(capsys):
    assert cli.parse_config(["table", "--height", "1", "--order", "1"]).method == "theorem"


def test_rational_needs_positive_height(capsys):
    status, _, err = run(capsys, "table", "--height", "0", "--order", "1", "--method", "rational")
    assert status == cli.EXIT_USAGE and "height" in err


@pytest.mark.parametrize("argv", [
    ["table", "--height", "-1", "--order", "2"],
    ["table", "--height", "x", "--order", "2"],
    ["table", "--height", "1"],
    ["table", "--height", "1", "--order", "2", "--method", "magic"],
    ["table", "--height", "1", "--order", "2", "--format", "xml"],
    ["frobnicate"],
    [],
])
def test_bad_flags_exit_one(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == cli.EXIT_USAGE
    assert "error" in err


def test_paths_listing(capsys):
    status, out, _ = run(capsys, "paths", "--height", "2", "--order", "2")
    assert status == 0
    assert out.splitlines() == ["UUDD (2, 1, 1, 1, 4)", "UDUD (2, 0, 2, 0, 2)"]
    _, out, _ = run(capsys, "paths", "--height", "0", "--order", "0")
    assert out.splitlines() == ["(empty) (0, 0, 0, 1, 0)"]
    _, out, _ = run(capsys, "paths", "--height", "1", "--order", "3")
    assert out.splitlines() == ["UDUDUD (3, 0, 3, 3, 3)"]


def test_paths_json_and_csv(capsys):
    _, out, _ = run(capsys, "paths", "--height", "2", "--order", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["paths"][0] == {"steps": "UUDD", "n": 2, "m": 1, "u": 1, "v": 1, "tri_area": 4}
    _, out, _ = run(capsys, "paths", "--height", "2", "--order", "2", "--format", "csv")
    assert out.splitlines()[1:] == ["UUDD,2,1,1,1,4", "UDUD,2,0,2,0,2"]


def test_limit(capsys):
    _, out, _ = run(capsys, "limit", "--order", "2")
    assert out.splitlines() == ["t^0: 1", "t^1: 1", "t^2: 1 + q"]
    _, out, _ = run(capsys, "limit", "--order", "3")
    assert out.splitlines()[-1] == "t^3: 1 + 2*q + q^2 + q^3"
    _, out, _ = run(capsys, "limit", "--order", "0")
    assert out.splitlines() == ["t^0: 1"]
    _, out, _ = run(capsys, "limit", "--order", "2", "--format", "json")
    assert json.loads(out)["method"] == "limit"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "d2.json"
    status, out, _ = run(capsys, "table", "--height", "2", "--order", "3", "--format", "json",
                         "--out", str(target))
    assert status == 0 and out == ""
    assert cli.parse_table(target.read_text(), "json") == genfun.d_theorem(2, 3)


@pytest.mark.parametrize("method", list(cli.METHODS))
@pytest.mark.parametrize("fmt", cli.FORMATS)
def test_round_trip(capsys, method, fmt):
    h, N = 3, 6
    status, out, _ = run(capsys, "table", "--height", str(h), "--order", str(N),
                         "--method", method, "--format", fmt)
    assert status == 0
    assert cli.parse_table(out, fmt, order=N) == cli.METHODS[method](h, N)


def test_csv_needs_order_for_trailing_zeros():
    text = cli.render_table(TSeries.const(B, 3), "csv", height=0, method="cf")
    assert cli.parse_table(text, "csv") == TSeries.const(B, 0)
    assert cli.parse_table(text, "csv", order=3) == TSeries.const(B, 3)


@pytest.mark.parametrize("method", list(cli.METHODS))
def test_json_and_csv_carry_same_terms(method):
    series = cli.METHODS[method](4, 7)
    doc = json.loads(cli.render_table(series, "json", height=4, method=method))
    from_json = sorted((r["t"], r["a"], r["b"], r["q"], r["coeff"]) for r in doc["terms"])
    reader = csv.DictReader(io.StringIO(cli.render_table(series, "csv", height=4, method=method)))
    from_csv = sorted((int(r["t"]), int(r["a"]), int(r["b"]), int(r["q"]), r["coeff"])
                      for r in reader)
    assert from_json == from_csv


def test_coefficients_beyond_64_bits_serialize_as_strings():
    big = 2**70 + 3
    s = TSeries([P(str(big)) * B], 0)
    doc = json.loads(cli.render_table(s, "json", height=0, method="x"))
    assert doc["terms"][0]["coeff"] == str(big)
    assert cli.parse_table(cli.render_table(s, "csv", height=0, method="x"), "csv") == s


def test_verify_report_locates_height_zero_mismatch(capsys):
    status, out, _ = run(capsys, "verify", "--height", "0", "--order", "0")
    lines = out.splitlines()
    assert status == cli.EXIT_VERIFY_FAILED
    failed = [ln for ln in lines if ln.startswith("[FAIL]")]
    assert len(failed) == 1
    assert "h=0" in failed[0] and "t^0" in failed[0]
    assert any("D_0 = b" in ln and ln.startswith("[PASS]") for ln in lines)


def test_verify_with_corrupted_bracket_fails(capsys):
    bad = list(BRACKET)
    bad[1] = bad[1]._replace(sign=-1)
    cfg = cli.RunConfig(command="verify", h=3, order=4)
    status, report = cli.cmd_verify(cfg, bracket=bad)
    assert status == cli.EXIT_VERIFY_FAILED
    line = next(ln for ln in report.splitlines() if "closed Q_h = recurrence" in ln)
    assert line.startswith("[FAIL]") and "t^0 coefficient of a^0*b^1*q^0" in line


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dyckarea", "limit", "--order", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == ["t^0: 1", "t^1: 1"]
