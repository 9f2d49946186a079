import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("REDOS_CLI")
SAMPLES = pathlib.Path(os.environ.get("REDOS_SOURCE_DIR", pathlib.Path(__file__).parents[2])) / "samples"

pytestmark = pytest.mark.skipif(not CLI, reason="REDOS_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


@pytest.mark.parametrize(
    "regex,code",
    [("(a+)+", 3), ("(a|b)*(a|c)*", 2), ("([^\\/<>])+", 0), ("(a", 1)],
)
def test_analyze_regex_exit_codes(regex, code):
    assert run("analyze-regex", regex, "--threshold", "10000").returncode == code


def test_json_output_is_deterministic():
    a = run("analyze-regex", "(a+)+", "--json", "--threshold", "10000")
    b = run("analyze-regex", "(a+)+", "--json", "--threshold", "10000")
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["schema_version"] == 1


def test_gen_attack():
    r = run("gen-attack", "(a+)+", "--pump", "3")
    assert r.returncode == 0
    assert r.stdout.strip()
    assert run("gen-attack", "abc").returncode == 5


def test_analyze_program(tmp_path):
    r = run("analyze-program", str(SAMPLES / "shop_form.strimp"), "--json")
    assert r.returncode == 2
    assert [w["site"] for w in json.loads(r.stdout)["warnings"]] == ["valid-comment"]
    bad = tmp_path / "bad.strimp"
    bad.write_text("x := ;\n")
    r = run("analyze-program", str(bad))
    assert r.returncode == 1
    assert "1:6" in r.stderr


def test_emit_curve(tmp_path):
    out = tmp_path / "curve.csv"
    r = run("analyze-regex", "(a+)+", "--threshold", "10000", "--emit-curve", str(out), "--curve-max", "4")
    assert r.returncode == 3
    lines = out.read_text().splitlines()
    assert lines[0] == "pattern,k,length,steps,exhausted"
    assert len(lines) > 4


SCHEMA = pathlib.Path(__file__).parents[2] / "docs" / "report-schema.json"


@pytest.mark.parametrize(
    "args",
    [
        ["analyze-regex", "(a+)+", "--threshold", "10000"],
        ["analyze-regex", "(a+)+", "--no-dynamic"],
        ["analyze-regex", "abc"],
        ["analyze-regex", "(?<=a)b"],
        ["analyze-regex", "(a|b)*a(a|b)(a|b)(a|b)+", "--budget", "2"],
        ["analyze-regex", "(a|b)*(a|c)*", "--threshold", "10000", "--timings"],
        ["analyze-program", str(SAMPLES / "shop_form.strimp"), "--threshold", "10000"],
        ["analyze-program", str(SAMPLES / "shop_form_no_length_guard.strimp"), "--no-dynamic", "--timings"],
    ],
)
def test_reports_match_schema(args):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    report = json.loads(run(*args, "--json").stdout)
    jsonschema.validate(report, schema)


def test_error_report_matches_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    bad = tmp_path / "bad.strimp"
    bad.write_text("x := ;\n")
    report = json.loads(run("analyze-program", str(bad), "--json").stdout)
    jsonschema.validate(report, json.loads(SCHEMA.read_text()))


def golden_regexes():
    rows = []
    for line in (SAMPLES / "regexes.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            regex, verdict = line.split("\t")
            rows.append((regex, verdict))
    return rows


@pytest.mark.parametrize("regex,verdict", golden_regexes())
def test_golden_regexes(regex, verdict):
    r = run("analyze-regex", regex, "--json", "--threshold", "100000")
    assert json.loads(r.stdout)["verdict"] == verdict
    assert r.returncode == {"linear": 0, "super-linear": 2, "exponential": 3}[verdict]
