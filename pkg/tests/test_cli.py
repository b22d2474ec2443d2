import io
import json
import subprocess
import sys

import jsonschema
import pytest

from quadzeta.cli import main
from quadzeta.report import RunReport, load_schema


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--format", "json")
    return code, json.loads(text)


def test_closed_form_outputs():
    assert run("closed-form", "--case", "split", "--n", "1", "--format", "text") == \
        (0, "1 - X + q*X^2\n")
    assert run("closed-form", "--case", "ramified", "--n", "0", "--format", "json") == \
        (0, "[[1]]\n")
    assert run("closed-form", "--case", "unramified", "--n", "2", "--format", "latex") == \
        (0, "1 + X + qX^2 + qX^3 + q^2X^4\n")


def test_recurrence_matches_closed_form_output():
    for case in ("ramified", "unramified", "split"):
        for n in range(6):
            a = run("closed-form", "--case", case, "--n", str(n))
            b = run("recurrence", "--case", case, "--n", str(n))
            assert a == b


def test_series_outputs():
    assert run("series", "--case", "ramified", "--n", "1", "--terms", "4")[1] == \
        "[1, 1, 1+q, 1+q, 1+q]\n"
    assert run("series", "--case", "unramified", "--n", "1", "--q", "3", "--terms", "4")[1] == \
        "[1, 1, 4, 1, 4]\n"
    assert run("series", "--case", "split", "--n", "0", "--terms", "3")[1] == "[1, 2, 3, 4]\n"


def test_series_json():
    code, rep = run_json("series", "--case", "ramified", "--n", "1", "--terms", "4")
    assert code == 0
    assert rep["results"]["series"] == [[1], [1], [1, 1], [1, 1], [1, 1]]


def test_check_fe():
    code, text = run("check-fe", "--case", "split", "--n", "0", "--n-max", "6")
    assert code == 0 and text.count("holds") == 7


@pytest.mark.parametrize("argv", [
    ("verify", "--case", "split", "--p", "3", "--n-max", "2", "--k-max", "5"),
    ("verify", "--case", "ramified", "--p", "5", "--n-max", "1", "--k-max", "4"),
])
def test_verify_all_pass(argv):
    code, text = run(*argv)
    assert code == 0
    assert text.strip().endswith("ALL PASS")


@pytest.mark.parametrize("bad", [
    ["verify", "--case", "split", "--p", "4", "--n-max", "1", "--k-max", "1"],
    ["verify", "--case", "split", "--p", "9", "--n-max", "1", "--k-max", "1"],
    ["verify", "--case", "cubic", "--p", "3", "--n-max", "1", "--k-max", "1"],
    ["closed-form", "--case", "split", "--n", "-1"],
    ["series", "--case", "split", "--n", "1", "--terms", "3", "--q", "1"],
    ["census", "--case", "split", "--p", "3", "--n", "1", "--k", "1", "--tau", "0"],
    ["census", "--case", "split", "--p", "3", "--n", "1", "--k", "1", "--tau", "0",
     "--delta", "-3"],
    ["units", "--case", "split", "--p", "3", "--n", "0"],
])
def test_usage_errors(bad, capsys):
    with pytest.raises(SystemExit) as exc:
        main(bad)
    assert exc.value.code == 2


def test_census_text():
    code, text = run("census", "--case", "split", "--p", "3", "--n", "1", "--k", "1")
    assert code == 0
    assert text.startswith("total 1, principal 0, nonprincipal 1")
    code, text = run("census", "--case", "ramified", "--p", "3", "--n", "1", "--k", "0")
    assert "total 1, principal 1" in text and "type 0: 1" in text
    code, text = run("census", "--case", "unramified", "--p", "3", "--n", "1", "--k", "3")
    assert text.startswith("total 1, principal 0, nonprincipal 1")


def test_census_json():
    code, rep = run_json("census", "--case", "split", "--p", "3", "--n", "2", "--k", "4")
    assert code == 0
    r = rep["results"]
    assert r["total"] == r["principal"] + r["nonprincipal"]
    assert sum(t["count"] for t in r["types"]) == r["principal"]
    assert sum(m["count"] for m in r["multipliers"]) == r["total"]


def test_custom_setup():
    code, rep = run_json("census", "--case", "split", "--p", "5", "--n", "1", "--k", "3",
                         "--tau", "0", "--delta", "-6")
    assert code == 0
    assert rep["parameters"]["delta"] == -6
    assert rep["results"]["total"] == 1 + 2 * 5  # a_3 of S_1/(1-t)^2 = 1 + 2q


def test_units():
    code, rep = run_json("units", "--case", "split", "--p", "3", "--n", "1")
    assert code == 0
    assert (rep["results"]["units_O0_mod_pn"], rep["results"]["units_On_mod_pn"]) == (4, 2)
    assert rep["results"]["unit_index"] == [-1, 1]


JSON_RUNS = [
    ("series", "--case", "split", "--n", "2", "--terms", "6"),
    ("series", "--case", "split", "--n", "2", "--terms", "6", "--q", "7"),
    ("check-fe", "--case", "unramified", "--n", "0", "--n-max", "5"),
    ("verify", "--case", "unramified", "--p", "3", "--n-max", "1", "--k-max", "3"),
    ("census", "--case", "ramified", "--p", "5", "--n", "2", "--k", "4"),
    ("units", "--case", "ramified", "--p", "5", "--n", "2"),
]


@pytest.mark.parametrize("argv", JSON_RUNS, ids=lambda a: a[0])
def test_json_reports_validate_and_roundtrip(argv):
    schema = load_schema()
    code, text = run(*argv, "--format", "json")
    assert code == 0
    doc = json.loads(text)
    jsonschema.validate(doc, schema)
    rep = RunReport.from_json(text)
    assert rep.to_json() == text.rstrip("\n")
    assert rep.passed


@pytest.mark.parametrize("argv", JSON_RUNS, ids=lambda a: a[0])
def test_json_deterministic(argv):
    a = json.loads(run(*argv, "--format", "json")[1])
    b = json.loads(run(*argv, "--format", "json")[1])
    a.pop("wall_time"), b.pop("wall_time")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_verify_reports_mismatch(monkeypatch):
    import quadzeta.verify as verify
    from quadzeta.polyseries import QPoly

    real = verify.unit_index
    monkeypatch.setattr(verify, "unit_index", lambda c, n: real(c, n) + QPoly((1,)))
    code, text = run("verify", "--case", "split", "--p", "3", "--n-max", "1", "--k-max", "1")
    assert code == 1
    assert "FAIL unit index n=1" in text and "MISMATCH" in text


def test_budget_exit(monkeypatch):
    import quadzeta.oracle as oracle
    monkeypatch.setattr(oracle, "UNIT_BUDGET", 10)
    code, _ = run("units", "--case", "split", "--p", "3", "--n", "2")
    assert code == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quadzeta", "closed-form", "--case",
                           "ramified", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "1 + q*X^2 + q^2*X^4\n"
