from __future__ import annotations

import csv
import io
import json

import pytest

from crossint.cli import CSV_COLUMNS, main, parse_ks


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


REPORT_KEYS = {"params", "regime", "values", "tuples", "classes", "checks", "failures", "runtime_ms"}


def test_bound_mixed(capsys):
    code, rep, _ = run_json(capsys, "bound", "--n", "5", "--ks", "3,3,2")
    assert code == 0 and set(rep) == REPORT_KEYS
    assert rep["values"]["bound"] == 19 and rep["values"]["branch"] == "λ₂"
    assert rep["regime"] == "mixed"


def test_bound_nonmixed(capsys):
    code, rep, _ = run_json(capsys, "bound", "--n", "6", "--ks", "3,3,2")
    assert code == 0
    assert rep["values"]["bound"] == 25 and rep["values"]["branch"] == "star"


@pytest.mark.parametrize("ks", ["3,2", "3,x", "3", "9,1"])
def test_bound_invalid(capsys, ks):
    code, out, err = run(capsys, "bound", "--n", "4", "--ks", ks)
    assert code == 2 and out == "" and "error" in err


def test_reorders_ks_with_warning(capsys):
    code, rep, err = run_json(capsys, "bound", "--n", "5", "--ks", "2,3,3")
    assert code == 0 and rep["params"]["ks"] == [3, 3, 2]
    assert "reordered" in err
    assert parse_ks("1,3,2") == (3, 2, 1)


def test_oracle_kernel(capsys):
    code, rep, _ = run_json(capsys, "oracle", "--n", "5", "--ks", "3,3,2")
    assert code == 0 and rep["values"]["M"] == 19 and rep["classes"] == ["kernel"]
    assert rep["checks"] == 1 and rep["failures"] == 0


def test_oracle_exceptional(capsys):
    code, rep, _ = run_json(capsys, "oracle", "--n", "5", "--ks", "3,3,2,2")
    assert code == 0 and rep["values"]["M"] == 20 and rep["classes"] == ["exceptional"]
    assert ["{2,3,5}", "{2,3,5}", "{1,3}", "{1,3}"] in rep["tuples"]


def test_oracle_two_families_csv(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "--ks", "2,2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and list(rows[0]) == CSV_COLUMNS
    assert rows[0]["oracle"] == "6" and rows[0]["match"] == "yes"


def test_oracle_budget_is_distinct(capsys):
    code, rep, err = run_json(capsys, "oracle", "--n", "7", "--ks", "4,4,3,3",
                              "--budget-nodes", "3", "--max-space", "0")
    assert code == 3 and rep["values"]["status"] == "budget-exhausted"
    assert "budget" in err


def test_profile(capsys):
    code, rep, _ = run_json(capsys, "profile", "--n", "5", "--ks", "3,3,2")
    assert code == 0
    assert rep["values"]["profile"] == [16, 17, 18, 19]
    assert rep["values"]["verdict"] == "endpoint-max"
    code, rep, _ = run_json(capsys, "profile", "--n", "5", "--ks", "3,3,2,2")
    assert rep["values"]["profile"] == [20, 20, 20, 20]
    assert rep["values"]["verdict"] == "exceptional-flat"
    code, rep, _ = run_json(capsys, "profile", "--n", "6", "--ks", "4,3,2")
    assert rep["values"]["first"] == 25 and rep["values"]["last"] == 31


def test_profile_outside_mixed(capsys):
    code, _, _ = run(capsys, "profile", "--n", "6", "--ks", "3,3,2")
    assert code == 2


@pytest.mark.parametrize("suite", ["partners", "increments"])
def test_verify_suites(capsys, suite):
    code, rep, _ = run_json(capsys, "verify", "--suite", suite, "--n-max", "8")
    assert code == 0 and rep["failures"] == 0 and rep["checks"] > 0


def test_verify_kk_is_deterministic(capsys):
    args = ["verify", "--suite", "kk", "--n-max", "6", "--seed", "7", "--trials", "300"]
    code, a, _ = run_json(capsys, *args)
    _, b, _ = run_json(capsys, *args)
    assert code == 0 and a["values"] == b["values"] and a["checks"] == 600


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_sweep_csv(capsys, tmp_path):
    out = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "sweep", "--n-max", "6", "--t-max", "3", "--format", "csv",
                     "--out", str(out))
    rows = list(csv.DictReader(out.open(encoding="utf-8")))
    assert code == 0 and rows
    assert all(r["match"] == "yes" for r in rows)
    keys = [(int(r["n"]), int(r["t"])) for r in rows]
    assert keys == sorted(keys)


def test_sweep_workers_match(capsys):
    base = ["sweep", "--n-max", "6", "--t-max", "3", "--regime", "mixed", "--format", "csv"]
    _, one, _ = run(capsys, *base)
    _, two, _ = run(capsys, *base, "--workers", "2")
    strip = lambda text: [line.rsplit(",", 1)[0] for line in text.splitlines()]
    assert strip(one) == strip(two)


def test_nonpositive_budget(capsys):
    code, _, _ = run(capsys, "oracle", "--n", "5", "--ks", "3,3,2", "--budget-nodes", "0")
    assert code == 2
