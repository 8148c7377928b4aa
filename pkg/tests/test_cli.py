import io
import json
from pathlib import Path

import pytest

from wsemigroup import arith, cli, single_place

import reference_data

SPECS = Path(__file__).resolve().parent.parent / "specs"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def spec(name):
    return SPECS / name


def test_gaps_e1():
    code, out, _ = run("gaps", spec("E1.json"), "--place", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["payload"]["gaps"]) == reference_data.E1_GAPS
    assert set(doc) == {"command", "fingerprint", "format_version", "payload", "warnings"}


def test_gamma_e2_four_places():
    code, out, _ = run("gamma", spec("E2.json"), "--places", "inf,1,2,3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert {tuple(t["tuple"]) for t in doc["payload"]["tuples"]} == reference_data.E2_GAMMA_0123
    assert any("abstract mode" in w for w in doc["warnings"])


def test_gamma_concrete_has_no_abstract_warning():
    code, out, _ = run("gamma", spec("E2_concrete.json"), "--places", "1,2", "--format", "json")
    assert code == 0 and json.loads(out)["warnings"] == []


def test_oracle_match_e1():
    code, out, _ = run("oracle", spec("E1.json"), "gamma", "--places", "1,2")
    assert code == 0
    assert "MATCH (14 tuples)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("oracle", "E2.json", "gaps", "--place", "inf"),
        ("oracle", "D1.json", "gamma", "--places", "1,2"),
        ("oracle", "E2.json", "closure", "--places", "1,2"),
    ],
)
def test_oracle_subcommands(argv):
    code, out, _ = run(argv[0], spec(argv[1]), *argv[2:])
    assert code == 0 and "MATCH" in out and "MISMATCH" not in out


def test_mutation_is_caught(monkeypatch):
    # flip one floor to a ceiling inside the closed-form gap bounds
    monkeypatch.setattr(single_place, "floor_div", arith.ceil_div)
    codes = [
        run("oracle", spec("E1.json"), "gaps", "--place", "1")[0],
        run("oracle", spec("E2.json"), "gaps", "--place", "inf")[0],
        run("oracle", spec("E2.json"), "gamma", "--places", "1,2")[0],
    ]
    assert codes == [3, 3, 3]


def test_determinism():
    argv = ("gamma", spec("E2.json"), "--places", "1,2,3", "--witnesses", "--format", "json")
    assert run(*argv) == run(*argv)


def test_csv_gaps():
    code, out, _ = run("gaps", spec("E2.json"), "--place", "1", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "place,element" and lines[1] == "1,1" and len(lines) == 13


def test_semigroup_and_dim():
    _, out, _ = run("semigroup", spec("E2.json"), "--place", "0", "--format", "json")
    payload = json.loads(out)["payload"]
    assert payload["generators"] == [4, 15, 18, 21]
    assert (payload["multiplicity"], payload["frobenius"], payload["symmetric"]) == (4, 17, False)
    _, out, _ = run("dim", spec("E1.json"), "--coeffs", "1:8", "--format", "json")
    assert json.loads(out)["payload"]["dimension"] == 2


def test_genus_table():
    code, out, _ = run("genus", spec("E1.json"))
    assert code == 0 and "genus  14" in out


def test_validate_exit_codes():
    assert run("validate", spec("E2_concrete.json"))[0] == 0
    code, out, _ = run("validate", spec("E1_concrete.json"))
    assert code == 0 and "L_splits_in_K" in out
    code, _, err = run("validate", spec("E1_concrete.json"), "--strict")
    assert code == 1 and "L_splits_in_K" in err


def test_usage_errors(tmp_path):
    assert run("gaps", spec("E1.json"))[0] == 2  # missing --place
    assert run("gaps", spec("E1.json"), "--place", "9")[0] == 2
    assert run("gaps", tmp_path / "nope.json", "--place", "1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"mode": "abstract", "n": 1}')
    code, _, err = run("genus", bad)
    assert code == 2 and "p" in err
    assert run("frobnicate")[0] == 2


def test_size_guard(tmp_path):
    big = tmp_path / "big.json"
    big.write_text(json.dumps({"mode": "abstract", "p": 2, "n": 21, "poles": [[1, 1]], "zeros": []}))
    assert run("genus", big)[0] == 2
    assert run("genus", big, "--force")[0] == 0
