"""Command-line front end: formats, schemas, exit codes."""

import csv
import io
import json

import pytest

from diamondsemi import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_text(capsys):
    code, out, _ = run(capsys, "tables", "--n", "4")
    assert code == 0
    assert "16 elements" in out
    assert "addition" in out and "multiplication" in out
    assert "(a1,a2,1)" in out


def test_tables_json_roundtrip(capsys):
    code, out, _ = run(capsys, "tables", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "diamondsemi.tables/1"
    assert data["order"] == 16 and len(data["elements"]) == 16
    assert len(data["add"]) == 16 and len(data["mul"][0]) == 16
    # the tables index into the element list
    assert all(0 <= c < 16 for row in data["add"] for c in row)


def test_tables_subset_small_chain(capsys):
    code, out, _ = run(capsys, "tables", "--n", "5", "--subset", "SI:1")
    assert code == 0
    assert "3 elements" in out


def test_tables_subset_json(capsys):
    code, out, _ = run(capsys, "tables", "--n", "4", "--subset", "E01",
                       "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["elements"]) == 4


def test_tables_csv_matches_json(capsys):
    code, jout, _ = run(capsys, "tables", "--n", "4", "--subset", "AC",
                        "--format", "json")
    data = json.loads(jout)
    code, cout, _ = run(capsys, "tables", "--n", "4", "--subset", "AC",
                        "--format", "csv")
    rows = list(csv.reader(io.StringIO(cout)))
    labels = data["elements"]
    assert rows[0] == ["op", "row\\col", *labels]
    body = rows[1:]
    m = len(labels)
    assert len(body) == 2 * m
    for op, table in (("add", data["add"]), ("mul", data["mul"])):
        block = [r for r in body if r[0] == op]
        for i, row in enumerate(block):
            assert row[1] == labels[i]
            assert row[2:] == [labels[c] for c in table[i]]


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--claims", "Cor 3.6")
    assert code == 0
    assert "Cor 3.6" in out and "1 pass" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--claims", "Example 3.2",
                       "--format", "json")
    assert code == 0  # mismatch-noted does not fail the process
    data = json.loads(out)
    assert data["schema"] == "diamondsemi.verify/1"
    (report,) = data["reports"]
    assert report["status"] == "mismatch-noted"
    assert report["witness"]["mul_mismatches"]


def test_verify_csv(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--claims", "Prop 3.1",
                       "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["claim", "n", "status", "witness", "notes", "seconds"]
    assert rows[1][:3] == ["Prop 3.1", "4", "pass"]


def test_verify_unknown_claim_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--n", "5", "--claims", "bogus")
    assert code == 2
    assert "unknown claim" in err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--n", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "diamondsemi.classify/1"
    rows = data["elements"]
    assert sum(r["nilpotent"] for r in rows) == 2
    assert sum(r["invertible"] for r in rows) == 2
    zero = next(r for r in rows if r["element"] == "(0,0,0)")
    assert not zero["zero_divisor"] and not zero["nilpotent"]
    # power orbits end at their first repetition
    for r in rows:
        orbit = r["power_orbit"]
        assert orbit[-1] in orbit[:-1]


def test_classify_formats_agree(capsys):
    code, jout, _ = run(capsys, "classify", "--n", "4", "--format", "json")
    data = json.loads(jout)
    code, cout, _ = run(capsys, "classify", "--n", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(cout)))
    header = rows[0]
    assert len(rows) - 1 == len(data["elements"])
    for parsed, row in zip(data["elements"], rows[1:]):
        rec = dict(zip(header, row))
        assert rec["element"] == parsed["element"]
        assert json.loads(rec["power_orbit"]) == parsed["power_orbit"]


def test_unknown_family_is_usage_error(capsys):
    code, _, err = run(capsys, "tables", "--n", "4", "--subset", "nope")
    assert code == 2 and "unknown family" in err


def test_cap_is_enforced(capsys, monkeypatch):
    code, _, err = run(capsys, "tables", "--n", "9")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("DIAMONDSEMI_MAX_N", "not-a-number")
    code, _, err = run(capsys, "tables", "--n", "4")
    assert code == 2


def test_out_file(capsys, tmp_path):
    target = tmp_path / "tables.json"
    code, out, _ = run(capsys, "tables", "--n", "4", "--subset", "AC",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["order"] == 4
