import csv
import io
import json
import math
import shutil
import subprocess
import sys

import pytest

from ml2.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_NUMERIC, EXIT_OK, main

from .conftest import CATALOG, load_catalog
from .oracles import d1_brute

REGION_ALLONES_TEXT = (
    "D1: case 2: converges for |x| < rho, |y| < rho'\n"
    "Delta=0 Delta'=0\n"
    "rho=1 rho_prime=1\n"
    "note: boundary |x| = rho or |y| = rho' is unclassified\n"
)
GRID_HEAD = "x,y,re,im,terms_used,tail_estimate,converged\n-0.5,-0.5,0.9742832010867003,0,136,"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_allones_origin(capsys):
    code, out, _ = run(capsys, "eval", "--function", "D1", "--params", "d1_allones.json", "--x", "0", "--y", "0")
    assert code == EXIT_OK
    pt = json.loads(out)["points"][0]
    p = load_catalog("d1_allones.json")["params"]
    want = 1 / (math.gamma(p["delta1"]) * math.gamma(p["delta2"]) * math.gamma(p["delta3"]))
    assert pt["value"]["re"] == pytest.approx(want, rel=1e-15)
    assert pt["converged"] is True


def test_eval_ml2_exp(capsys):
    code, out, _ = run(capsys, "eval", "--function", "ML2", "--alpha", "1", "--beta", "1", "--z", "0.7")
    assert code == EXIT_OK
    assert json.loads(out)["points"][0]["value"]["re"] == pytest.approx(math.exp(0.7), rel=1e-15)


def test_eval_grid_csv(capsys):
    code, out, _ = run(capsys, "eval", "--function", "D1", "--params", "sample.json", "--grid", "3x3",
                       "--radius-frac", "0.5", "--format", "csv")
    assert code == EXIT_OK
    assert out.startswith(GRID_HEAD)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9
    p = load_catalog("sample.json")["params"]
    for r in rows:
        want = d1_brute(p, float(r["x"]), float(r["y"]), size=60)
        assert float(r["re"]) == pytest.approx(want, rel=1e-12)


def test_eval_text_and_set(capsys):
    code, out, _ = run(capsys, "eval", "--function", "ML2", "--set", "alpha=1", "--set", "beta=1",
                       "--z", "0.7", "--format", "text")
    assert code == EXIT_OK
    assert out.startswith("ML2(0.69999999999999996, 0) = 2.0137527074704766")


def test_eval_precision_flag(capsys):
    argv = ("eval", "--function", "ML2", "--alpha", "1", "--beta", "1", "--z", "-5")
    _, out, _ = run(capsys, *argv, "--precision", "double")
    dbl = json.loads(out)["points"][0]["value"]["re"]
    _, out, _ = run(capsys, *argv)
    ext = json.loads(out)["points"][0]["value"]["re"]
    assert ext == pytest.approx(math.exp(-5), rel=1e-13)
    assert dbl == pytest.approx(math.exp(-5), rel=1e-10)


def test_eval_divergent_exit(capsys):
    code, _, err = run(capsys, "eval", "--function", "D1", "--params", "d1_allones.json", "--x", "1.5", "--y", "0")
    assert code == EXIT_NUMERIC and "numeric error" in err
    code, out, _ = run(capsys, "eval", "--function", "D1", "--params", "d1_allones.json", "--x", "1.5", "--y", "0",
                       "--allow-nonconverged")
    assert code == EXIT_OK and json.loads(out)["points"][0]["converged"] is False


@pytest.mark.parametrize("argv", [
    ("eval", "--function", "NOPE", "--x", "0.1"),
    ("eval", "--function", "D1", "--x", "0.1"),
    ("eval", "--function", "D1", "--params", "missing.json", "--x", "0.1"),
    ("eval", "--function", "D1", "--params", "d1_allones.json", "--grid", "3by3"),
    ("eval", "--function", "ML2", "--alpha", "1", "--beta", "1"),
    ("eval", "--function", "ML2", "--set", "alpha", "--z", "1"),
    ("verify",),
    ("verify", "--identity", "euler99"),
    ("verify", "--identity", "euler1", "--samples", "0"),
    ("bogus",),
    ("eval", "--x", "not-a-number"),
    ("eval", "--function", "ML2", "--alpha", "1", "--beta", "1", "--z", "1", "--precision", "quad"),
])
def test_config_errors(capsys, argv):
    # argparse failures leave through SystemExit, the rest return the code
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_CONFIG


def test_region_allones_text(capsys):
    code, out, _ = run(capsys, "region", "--function", "D1", "--params", "d1_allones.json", "--format", "text")
    assert code == EXIT_OK and out == REGION_ALLONES_TEXT


def test_region_json_and_csv(capsys):
    _, out, _ = run(capsys, "region", "--function", "D1", "--params", "d1_allones.json")
    d = json.loads(out)
    assert d["case"] == 2 and d["rho"] == 1.0 and d["rho_prime"] == 1.0
    _, out, _ = run(capsys, "region", "--function", "D1", "--params", "d1_allones.json", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "mu,nu,r,s" and len(lines) == 65


@pytest.mark.parametrize("sets,case", [(("alpha3=2", "beta3=2"), 1), (("alpha1=2", "beta1=2"), 3)])
def test_region_cases(capsys, sets, case):
    argv = ["region", "--function", "D1", "--params", "d1_allones.json"]
    for s in sets:
        argv += ["--set", s]
    _, out, _ = run(capsys, *argv)
    assert json.loads(out)["case"] == case


def test_region_univariate(capsys):
    _, out, _ = run(capsys, "region", "--function", "ML2", "--alpha", "1", "--beta", "1")
    assert json.loads(out)["radius"] == math.inf


def test_spec_file(tmp_path, capsys):
    spec = {"arity": 1, "numerators": [{"gamma": 1.0, "a": 1.0, "b": 0.0}],
            "denominators": [{"delta": 1.0, "a": 1.0, "b": 0.0}]}
    f = tmp_path / "geo.json"
    f.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "eval", "--function", str(f), "--z", "0.5")
    assert code == EXIT_OK
    assert json.loads(out)["points"][0]["value"]["re"] == pytest.approx(2.0, rel=1e-14)


def test_verify_spec_examples(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "euler10", "--params", "eq21.json", "--samples", "5",
                       "--tol", "1e-6")
    assert code == EXIT_OK and json.loads(out)["pass"] is True
    assert len(json.loads(out)["results"][0]["cases"][0]["samples"]) == 5
    code, out, _ = run(capsys, "verify", "--identity", "pde-x", "--params", "d1_int.json", "--bound", "50")
    assert code == EXIT_OK
    case = json.loads(out)["results"][0]["cases"][0]
    assert case["pass"] and case["printed_reading"]["pass"] is False
    code, out, _ = run(capsys, "verify", "--identity", "laplace22", "--p", "2", "--tol", "1e-6")
    assert code == EXIT_OK
    cases = json.loads(out)["results"][0]["cases"]
    assert len(cases) == 5 and all(c["bindings"]["p"] == 2 for c in cases)


def test_verify_failure_exit(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "euler10", "--params", "eq21.json", "--variant", "printed")
    assert code == EXIT_FAIL and json.loads(out)["pass"] is False


def test_verify_precondition_exit(tmp_path, capsys):
    b = dict(load_catalog("eq21.json")["bindings"], alpha3=0.25)
    f = tmp_path / "bad.json"
    f.write_text(json.dumps({"identity": "euler10", "bindings": b}))
    code, _, err = run(capsys, "verify", "--params", str(f))
    assert code == EXIT_CONFIG and "alpha3 - alpha2" in err


def test_verify_deterministic(capsys):
    argv = ("verify", "--identity", "euler3", "--identity", "pde-y", "--seed", "11", "--samples", "2")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    _, c, _ = run(capsys, *argv[:-3], "12", "--samples", "2")
    assert c != a


def test_verify_text_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "lemma1", "--samples", "1", "--format", "text")
    assert code == EXIT_OK and out.splitlines()[-1] == "overall PASS"
    code, out, _ = run(capsys, "verify", "--identity", "lemma1", "--samples", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9 and all(r["pass"] == "true" for r in rows)


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK and "D1" in d["presets"] and "euler10" in d["identities"]
    assert "d1_allones.json" in d["files"]


def test_catalog_env_override(tmp_path, monkeypatch, capsys):
    shutil.copy(CATALOG / "d1_allones.json", tmp_path / "mine.json")
    monkeypatch.setenv("ML2_CATALOG_DIR", str(tmp_path))
    code, out, _ = run(capsys, "eval", "--function", "D1", "--params", "mine.json", "--x", "0", "--y", "0")
    assert code == EXIT_OK
    _, out, _ = run(capsys, "catalog", "--format", "json")
    assert json.loads(out)["files"] == ["mine.json"]
    code, _, _ = run(capsys, "eval", "--function", "D1", "--params", "d1_allones.json", "--x", "0", "--y", "0")
    assert code == EXIT_CONFIG


def test_console_script():
    exe = shutil.which("ml2")
    cmd = [exe] if exe else [sys.executable, "-m", "ml2.cli"]
    proc = subprocess.run(cmd + ["eval", "--function", "ML2", "--alpha", "1", "--beta", "1", "--z", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["points"][0]["value"]["re"] == 1.0
    proc = subprocess.run(cmd + ["eval", "--function", "NOPE", "--z", "0"], capture_output=True, text=True)
    assert proc.returncode == EXIT_CONFIG
