"""Harness contract: exit codes, determinism, report schema."""

import json
import math
import subprocess
import sys

import pytest

jsonschema = pytest.importorskip("jsonschema")

from divsum.cli import main as cli_main


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "divsum.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_pass_exit_code():
    code, out, _ = run_cli(["verify", "--id", "coalescence-fir", "--x", "2.5", "--json"])
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["verdict"] == "Pass"


def test_fail_exit_code_with_reason():
    code, out, _ = run_cli(["verify", "--id", "main-plus", "--s", "0.5", "--x", "3"])
    assert code == 1
    assert "DomainRestriction" in out


def test_usage_error_exit_code():
    code, _, err = run_cli(["verify", "--id", "nonsense"])
    assert code == 2
    assert "unknown identity" in err


def test_missing_id_is_usage_error():
    code, _, err = run_cli(["verify", "--x", "2.5"])
    assert code == 2


def test_special_values():
    code, out, _ = run_cli(["special", "zeta", "0"])
    assert code == 0 and out.startswith("-0.5")
    code, out, _ = run_cli(["special", "besselK", "0.5", "2"])
    assert code == 0
    assert abs(float(out.split()[0]) - math.sqrt(math.pi / 4.0) * math.exp(-2)) < 1e-12
    code, out, _ = run_cli(["special", "sigma", "0", "6"])
    assert code == 0 and out.startswith("4")
    code, _, _ = run_cli(["special", "noSuchFn", "1"])
    assert code == 2
    code, _, _ = run_cli(["special", "zeta"])  # arity mismatch
    assert code == 2


def test_special_pfq():
    code, out, _ = run_cli(["special", "pFq", "0.25", "0.75", "1", "/",
                            "0.25", "0.75", "/", "-0.21"])
    assert code == 0
    assert abs(float(out.split()[0]) - 1.0 / 1.21) < 1e-10


def test_json_determinism_across_jobs(tmp_path):
    args = ["sweep", "--id", "coalescence-fir", "--x", "2.3,2.5,3.7", "--json"]
    outs = []
    for jobs in ("1", "3"):
        code, out, _ = run_cli([*args, "--jobs", jobs])
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    # and across repeated runs
    code, out, _ = run_cli([*args, "--jobs", "1"])
    assert out == outs[0]


def test_sweep_grid_and_inconclusive_exit():
    code, out, _ = run_cli(["sweep", "--id", "lambda-phi", "--x", "0.9,1.4",
                            "--s", "0.3", "--json"])
    assert code in (0, 3)
    recs = [json.loads(line) for line in out.strip().splitlines()]
    assert len(recs) == 2


def test_records_validate_against_schema():
    import importlib.resources as res
    schema = json.loads(res.files("divsum").joinpath("report_schema.json").read_text())
    code, out, _ = run_cli(["sweep", "--id", "coalescence-aux", "--x", "1.4,2.5",
                            "--json"])
    for line in out.strip().splitlines():
        jsonschema.validate(json.loads(line), schema)


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("id = coalescence-fir\nx = 2.5\n# comment\n")
    code, out, _ = run_cli(["verify", "--config", str(cfg), "--json"])
    assert code == 0
    rec = json.loads(out)
    assert rec["inputs"]["x"] == 2.5
    code, out, _ = run_cli(["verify", "--config", str(cfg), "--x", "3.7", "--json"])
    assert json.loads(out)["inputs"]["x"] == 3.7


def test_csv_output(tmp_path):
    out_file = tmp_path / "rep.csv"
    code, _, _ = run_cli(["verify", "--id", "coalescence-fir", "--x", "2.5",
                          "--csv", "--out", str(out_file)])
    assert code == 0
    lines = out_file.read_text().strip().splitlines()
    assert lines[0].startswith("identity_id")
    assert "coalescence-fir" in lines[1]


def test_list_subcommand():
    code, out, _ = run_cli(["list"])
    assert code == 0
    assert "modular-selfreciprocal" in out
    assert "voronoi-sharp" in out


def test_main_callable_directly():
    assert cli_main(["list"]) == 0
