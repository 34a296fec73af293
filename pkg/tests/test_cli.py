import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from chebbound.cli import main
from chebbound.supremum import PUBLISHED_TABLE, compute_sup


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_table_csv(capsys):
    code, out = run(capsys, "table", "--max-nu", "30", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["nu", "value"]
    assert len(rows) == 31
    assert rows[1] == ["1", "0.444444444444"]
    assert rows[21] == ["21", PUBLISHED_TABLE[21]]


def test_table_csv_roundtrip(capsys):
    _, out = run(capsys, "table", "--max-nu", "8", "--format", "csv", "--digits", "20")
    for row in list(csv.DictReader(io.StringIO(out))):
        exact = compute_sup(int(row["nu"]), 20).value_exact
        assert abs(Fraction(row["value"]) - exact) <= Fraction(1, 2 * 10**20)


def test_table_short_digits(capsys):
    _, out = run(capsys, "table", "--max-nu", "3", "--format", "csv", "--digits", "3")
    assert out.splitlines()[1] == "1,0.444"


def test_table_markdown_and_json(capsys):
    _, md = run(capsys, "table", "--max-nu", "2")
    assert md.startswith("| nu |")
    _, js = run(capsys, "table", "--max-nu", "2", "--format", "json")
    data = json.loads(js)
    assert [d["nu"] for d in data] == [1, 2]


def test_sup_text(capsys):
    code, out = run(capsys, "sup", "--nu", "2")
    assert code == 0
    assert "value = " + PUBLISHED_TABLE[2] in out
    assert "maximizer_t = 0.645497224368" in out


def test_sup_json(capsys):
    _, out = run(capsys, "sup", "--nu", "1", "--format", "json")
    data = json.loads(out)
    assert data["value_exact"] == "4/9"
    assert data["endpoint_is_max"] is True


def test_poly(capsys):
    _, out = run(capsys, "poly", "--kind", "R", "--k", "0", "--format", "json")
    assert json.loads(out)["coefficients"] == [0, -4]
    _, out = run(capsys, "poly", "--kind", "T", "--k", "3", "--format", "json")
    assert json.loads(out)["coefficients"] == [0, -3, 0, 4]
    _, out = run(capsys, "poly", "--kind", "Q", "--k", "1")
    assert out.startswith("Q_1(x)")


@pytest.mark.parametrize(
    "argv",
    [
        ["sup", "--nu", "0"],
        ["table", "--max-nu", "0"],
        ["poly", "--kind", "Z", "--k", "1"],
        ["certify", "--nu-max", "30"],
        ["sup", "--nu", "2", "--digits", "40", "--precision", "20"],
        [],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_certify_exit_zero(capsys):
    code, out = run(capsys, "certify", "--nu-max", "100", "--sup-cap", "30")
    assert code == 0
    assert out.rstrip().endswith("RESULT: PASS")
    assert "U(alpha*) = 0.419446860530 < 4/9 : PASS" in out


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "chebbound", "table", "--max-nu", "5", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert a.startswith(b"nu,value\n")


def test_precision_env(monkeypatch, capsys):
    monkeypatch.setenv("CHEBBOUND_PRECISION", "50")
    code, out = run(capsys, "sup", "--nu", "3", "--digits", "30")
    assert code == 0
