import csv
import io
import json
import math
import os
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from doublecone import cli as cli_module
from doublecone._format import fmt

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "verify_report.schema.json").read_text())


def table(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_spectrum_example(cli):
    out = cli("spectrum", "--alpha", "1", "--B0", "1", "--m", "0", "--n", "0..0", "--j", "0..0",
              "--lambda", "+1", "--s", "+1", "--eta", "-1", check_code=0).stdout
    assert out.splitlines()[0] == "alpha,n,j,lambda,s,eta,B0,m,E2,E,degenerate"
    (row,) = table(out)
    assert float(row["E2"]) == pytest.approx(2.0, rel=1e-12)
    assert float(row["E"]) == pytest.approx(math.sqrt(2), rel=1e-11)


def test_spectrum_other_nappe(cli):
    out = cli("spectrum", "--alpha", "1", "--B0", "1", "--n", "0..0", "--j", "0..0", "--eta", "+1",
              check_code=0).stdout
    (row,) = table(out)
    assert float(row["E2"]) == 1.0


def test_spectrum_ordering_and_degenerate_flag(cli):
    rows = table(cli("spectrum", "--alpha", "1", "--B0", "1", "--n", "0..1", "--j", "-2..1",
                     check_code=0).stdout)
    keys = [(int(r["n"]), int(r["j"]), int(r["eta"])) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        assert r["degenerate"] == str(int(int(r["j"]) + 1 == 0))


def test_spectrum_zero_field(cli):
    proc = cli("spectrum", "--alpha", "1", "--B0", "0", check_code=2)
    assert proc.stderr.strip().endswith("Landau levels require B0 > 0")
    assert len(proc.stderr.strip().splitlines()) == 1


@pytest.mark.parametrize("args", [
    ["spectrum", "--alpha", "1.5", "--B0", "1"],
    ["spectrum", "--alpha", "1", "--B0", "1", "--n", "3..1"],
    ["spectrum", "--alpha", "1", "--B0", "1", "--s", "2"],
    ["wavefunction", "--kind", "landau", "--n", "-1"],
    ["wavefunction", "--kind", "landau", "--j", "0.5"],
    ["fig3", "--B-grid", "2,1"],
    ["nonsense"],
    [],
])
def test_usage_errors(cli, args):
    proc = cli(*args, check_code=2)
    assert len(proc.stderr.strip().splitlines()) == 1


def test_scar_scan_flip(cli):
    rows = table(cli("scar-scan", "--s", "+1", "--alpha", "0.7", "--j-grid", "-0.01,0,0.01", check_code=0).stdout)
    assert [(r["neg_A_admissible"], r["neg_B_admissible"]) for r in rows] == [
        ("false", "true"), ("true", "true"), ("true", "false")]


def test_scar_scan_zero_and_empty(cli):
    (row,) = table(cli("scar-scan", "--j-grid", "0", check_code=0).stdout)
    assert row["neg_A_admissible"] == row["neg_B_admissible"] == "true"
    cli("scar-scan", "--j-grid", "", check_code=2)


def test_wavefunction_ground_nodeless(cli):
    rows = table(cli("wavefunction", "--kind", "landau", "--n", "0", "--j", "0", "--l-min", "0.01",
                     check_code=0).stdout)
    assert all(float(r["psi"]) > 0 for r in rows)


def test_wavefunction_n2_two_sign_changes(cli):
    rows = table(cli("wavefunction", "--kind", "landau", "--n", "2", "--j", "1", "--alpha", "0.7",
                     "--l-min", "0.01", "--l-points", "2000", check_code=0).stdout)
    psi = np.array([float(r["psi"]) for r in rows])
    psi = psi[np.abs(psi) > 1e-12 * np.max(np.abs(psi))]
    assert np.count_nonzero(np.diff(np.sign(psi)) != 0) == 2


def test_wavefunction_free_sine(cli):
    rows = table(cli("wavefunction", "--kind", "free", "--j", "0", "--K", "1.3", "--coeffs", "1,0",
                     check_code=0).stdout)
    for r in rows:
        l = float(r["l"])
        assert float(r["psi"]) == pytest.approx(math.sin(1.3 * l) / math.sqrt(l), rel=1e-11, abs=1e-12)


def test_fig3_default(cli):
    rows = table(cli("fig3", check_code=0).stdout)
    assert {(int(r["n"]), int(r["j"])) for r in rows} == {(0, 0), (1, 1), (2, 2)}
    by_key = {(float(r["alpha"]), r["n"], r["B"]): float(r["E"]) for r in rows}
    for (alpha, n, B), E in by_key.items():
        if alpha == 0.7:
            assert E < by_key[(1.0, n, B)]


def test_fig3_single_point(cli):
    rows = table(cli("fig3", "--B-grid", "2", check_code=0).stdout)
    assert len(rows) == 6


def test_fig3_j_list_override(cli):
    rows = table(cli("fig3", "--n-list", "0,1", "--j-list", "-1,0", "--B-points", "3", check_code=0).stdout)
    assert {(r["n"], r["j"]) for r in rows} == {("0", "-1"), ("1", "0")}


def test_verify_default(cli):
    proc = cli("verify", check_code=0)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, SCHEMA)
    spectrum = next(s for s in report["suites"] if s["suite"] == "spectrum")
    assert spectrum["checks"][0]["value"] <= 1e-4


def test_verify_fault_injection(cli):
    proc = cli("verify", "--inject-fault", "drop-eta-term", check_code=1)
    jsonschema.validate(json.loads(proc.stdout), SCHEMA)
    assert "spectrum_vs_fd_oracle" in proc.stderr and "'alpha'" in proc.stderr


def test_verify_suite_filter(cli):
    report = json.loads(cli("verify", "--suite", "specfun", check_code=0).stdout)
    jsonschema.validate(report, SCHEMA)
    assert [s["suite"] for s in report["suites"]] == ["specfun"]


def test_output_dir_env(cli, tmp_path):
    env = dict(os.environ, DOUBLECONE_OUTPUT_DIR=str(tmp_path))
    cli("scar-scan", "--j-grid", "0", "--output", "sub/scar.csv", env=env, check_code=0)
    assert (tmp_path / "sub" / "scar.csv").read_text().startswith("j,nu_A")


def test_json_format(cli):
    rows = json.loads(cli("scar-scan", "--j-grid", "0,1", "--format", "json", check_code=0).stdout)
    assert rows[1]["j"] == 1 and rows[0]["neg_A_admissible"] is True


def test_negative_option_values_normalized():
    assert cli_module._normalize_argv(["--j", "-2..2", "--alpha", "1"]) == ["--j=-2..2", "--alpha", "1"]


@pytest.mark.parametrize("x, text", [(2.0, "2"), (math.sqrt(2), "1.41421356237"), (1e-5, "1.00000000000e-05"),
                                     (1.5e6, "1.50000000000e+06"), (0.0, "0"), (-0.25, "-0.25")])
def test_number_format(x, text):
    assert fmt(x) == text


def test_in_process_main(capsys):
    assert cli_module.main(["spectrum", "--alpha", "1", "--B0", "1"]) == 0
    assert capsys.readouterr().out.count("\n") == 3
