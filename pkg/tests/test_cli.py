import json
from importlib import resources

import jsonschema
import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from spacecurves import audit as audit_mod
from spacecurves import cli
from spacecurves.audit import AuditRow, AuditTranscript
from spacecurves.classifier import classify, dim_w

SCHEMA = json.loads(
    resources.files("spacecurves").joinpath("schema/atlas_record.schema.json").read_text("utf-8")
)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def validate(obj):
    VALIDATOR.validate(obj)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -------------------------------------------------------------- classify

def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--s", "4", "--a", "12", "--b", "8", "--json")
    assert code == 0
    rec = json.loads(out)
    validate(rec)
    assert rec["record"]["status"] == "NonReducedComponent"
    assert rec["record"]["dimW"] == 178
    assert rec["provenance"]["assumptions"]


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", "--s", "4", "--a", "6", "--b", "4")
    assert code == 0
    assert "ExceptionalTriple" in out and "assumption" in out


def test_classify_failed_hypothesis_is_not_an_error(capsys):
    code, out, _ = run(capsys, "classify", "--s", "4", "--a", "1", "--b", "1", "--json")
    assert code == 0
    rec = json.loads(out)["record"]
    assert rec["case"] == "HypothesisFailed" and rec["failedHypothesis"] == "d ≤ s²"


def test_classify_small_s_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "--s", "3", "--a", "1", "--b", "1")
    assert code == 2 and "--s" in err


# ---------------------------------------------------------------- others

def test_cubic_json(capsys):
    code, out, _ = run(capsys, "cubic", "--d", "14", "--g", "24", "--json")
    assert code == 0
    rec = json.loads(out)
    validate(rec)
    assert rec["record"]["inConjectureRange"] is True
    assert rec["record"]["existence48"] == "Yes"


def test_cubic_with_mismatched_tuple(capsys):
    code, _, err = run(capsys, "cubic", "--d", "14", "--g", "24", "--tuple", "10", "4", "3", "3", "3", "3", "3")
    assert code == 2 and "invariants" in err


def test_tuples(capsys):
    code, out, _ = run(capsys, "tuples", "--d", "14", "--g", "24", "--m6", "1,2", "--json")
    assert code == 0
    assert json.loads(out)["tuples"] == [[12, 4, 4, 4, 4, 4, 2]]
    code, out, err = run(capsys, "tuples", "--d", "14", "--g", "24")
    assert out.splitlines() == ["(11,4,3,3,3,3,3)", "(12,4,4,4,4,4,2)"]
    assert "2 tuple(s)" in err


def test_maxgenus(capsys):
    assert run(capsys, "maxgenus", "--d", "22", "--s", "6")[1].strip() == "Conjectural(55)"
    code, out, _ = run(capsys, "maxgenus", "--d", "36", "--s", "5", "--json")
    assert json.loads(out)["value"] == 147


def test_audit_all(capsys):
    code, out, _ = run(capsys, "audit", "all")
    assert code == 0
    assert "FLAG" in out and "MISMATCH" not in out
    code, out, _ = run(capsys, "audit", "Q12_8", "--json")
    assert json.loads(out)["ok"] is True


def test_audit_regression_exit_code(capsys, monkeypatch):
    broken = AuditTranscript(audit_mod.AuditCase.Q12_8, (AuditRow("h0(N_X)", 164, 163),), "x")
    monkeypatch.setattr(cli, "audit_case", lambda case: broken)
    code, out, _ = run(capsys, "audit", "Q12_8")
    assert code == 5 and "MISMATCH" in out


# ----------------------------------------------------------------- atlas

def test_atlas_deterministic_and_valid(tmp_path):
    p1, p2 = tmp_path / "a.ndjson", tmp_path / "b.ndjson"
    args = ["atlas", "--s", "4..6", "--a-max", "30", "--b-max", "30"]
    assert cli.main(args + ["--out", str(p1)]) == 0
    assert cli.main(args + ["--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    records = [json.loads(line) for line in p1.read_text("utf-8").splitlines()]
    by_key = {}
    for rec in records:
        validate(rec)
        r = rec["record"]
        assert r["dimW"] == dim_w(r["s"], r["d"], r["g"])
        assert r["case"] != "HypothesisFailed"
        by_key[(r["s"], r["a"], r["b"])] = r
    keys = list(by_key)
    assert keys == sorted(keys) and len(keys) == len(records)
    for key in [(4, 12, 8), (5, 8, 6), (6, 10, 8)]:
        assert by_key[key] == cli.json_safe(classify(*key).to_json())


def test_atlas_empty_range(tmp_path):
    out = tmp_path / "empty.ndjson"
    assert cli.main(["atlas", "--s", "7..6", "--a-max", "5", "--b-max", "5", "--out", str(out)]) == 0
    assert out.read_bytes() == b""


def test_atlas_cap(tmp_path, capsys):
    out = tmp_path / "x.ndjson"
    code, _, err = run(capsys, "atlas", "--s", "4..10", "--a-max", "100", "--b-max", "100",
                       "--out", str(out), "--cap", "1000")
    assert code == 4 and "cap" in err
    assert not out.exists()


def test_atlas_io_error(tmp_path, capsys):
    bad = tmp_path / "missing" / "dir" / "x.ndjson"
    code, _, err = run(capsys, "atlas", "--s", "4..4", "--a-max", "3", "--b-max", "3", "--out", str(bad))
    assert code == 3 and "cannot write" in err


# ----------------------------------------------------------- serializing

def test_json_safe_large_integers():
    big = 2**53
    assert cli.json_safe({"x": big, "y": [big - 1, True, None]}) == {"x": str(big), "y": [big - 1, True, None]}
    validate({"record": _big_report(), "provenance": {"artifact_version": "0", "assumptions": []}})


def _big_report():
    js = classify(4, 12, 8).to_json()
    js["dimW"] = str(2**60)
    return js


def test_schema_rejects_garbage():
    with pytest.raises(jsonschema.ValidationError):
        validate({"record": {"kind": "FamilyReport"}, "provenance": {}})


# ------------------------------------------------------------- malformed

def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "classify", "--s", "4")[0] == 2
    assert run(capsys, "classify", "--s", "x", "--a", "1", "--b", "1")[0] == 2
    assert run(capsys, "classify", "--s", "4", "--a", "1", "--b", "1", "--json", "--table")[0] == 2
    assert run(capsys, "atlas", "--s", "4-6", "--a-max", "1", "--b-max", "1", "--out", "x")[0] == 2
    assert run(capsys, "audit", "Q99")[0] == 2
    assert run(capsys, "classify", "--s", "4", "--a", str(10**7), "--b", "1")[0] == 2
    assert run(capsys, "tuples", "--d", "0", "--g", "1")[0] == 2
    assert run(capsys, "tuples", "--d", "14", "--g", "1", "--m6", "a,b")[0] == 2
    assert run(capsys, "maxgenus", "--d", "0", "--s", "4")[0] == 2


@settings(max_examples=60, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.lists(st.sampled_from(
    ["classify", "atlas", "cubic", "--s", "--a", "--b", "--d", "--g", "--json", "x", "-1", "4", "1..", "--cap"]
), max_size=6))
def test_random_argv_never_crashes(capsys, argv):
    code = cli.main(argv)
    capsys.readouterr()
    assert code in (0, 2)
