import subprocess
import sys

import numpy as np
import pytest

from vdwlight import scan
from vdwlight.cli import main as cli_main


MINI_SWEEP = """
scenario = "custom"

[atoms.a]
preset = "rb87_d2"
omega0_ev = 1.59

[atoms.b]
preset = "k40_d2"
omega0_ev = 1.61

[field]
kind = "thermal"
temperature_in_omega_a = 1.0

[sweep]
variable = "r_over_lambda"
min = 0.01
max = 10.0
count = 7
spacing = "log"

[outputs]
columns = ["F_A_rho", "F_B_rho", "F_net", "U_A", "U_B", "regime"]
"""

VACUUM_SWEEP = MINI_SWEEP.replace(
    'kind = "thermal"\ntemperature_in_omega_a = 1.0',
    'kind = "vacuum"').replace(
    'columns = ["F_A_rho", "F_B_rho", "F_net", "U_A", "U_B", "regime"]',
    'columns = ["U_A", "U_B", "regime"]') + \
    "\n[numerics]\ninclude_equilibrium = false\n"


@pytest.fixture()
def mini_config(tmp_path):
    path = tmp_path / "mini.toml"
    path.write_text(MINI_SWEEP)
    return path


def test_validate_preset_fig1a():
    report = scan.validate_config(scan.preset_path("fig1a"))
    assert report.ok
    # lambda_A = 2 pi c/omega_A for the 1.59 eV line is ~780 nm
    assert float(report.info["lambda_a_m"]) == pytest.approx(7.8e-7,
                                                             rel=0.01)


def test_validate_count_rule(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(MINI_SWEEP.replace("count = 7", "count = 1"))
    report = scan.validate_config(path)
    assert not report.ok
    assert any("count >= 2" in e for e in report.errors)


def test_validate_unknown_preset(tmp_path):
    path = tmp_path / "bad.toml"
    path.write_text(MINI_SWEEP.replace('preset = "rb87_d2"',
                                       'preset = "rb887"'))
    report = scan.validate_config(path)
    assert not report.ok
    joined = " ".join(report.errors)
    assert "rb887" in joined and "rb87_d2" in joined


def test_validate_collects_all_errors(tmp_path):
    path = tmp_path / "bad.toml"
    body = MINI_SWEEP.replace("count = 7", "count = 1") \
                     .replace('variable = "r_over_lambda"',
                              'variable = "banana"')
    path.write_text(body)
    report = scan.validate_config(path)
    assert not report.ok
    assert len(report.errors) >= 2


def test_parse_error_reports_location(tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("[sweep\nmin = 1\n")
    report = scan.validate_config(path)
    assert not report.ok


def test_unknown_scenario_preset_lists_available():
    with pytest.raises(scan.ConfigError) as err:
        scan.preset_path("fig99")
    assert "fig1a" in str(err.value)


def test_run_mini_sweep_columns_and_order(mini_config):
    config = scan.load_config(mini_config)
    result = scan.run_sweep(config)
    assert result.n_failures == 0
    assert result.columns[0] == "r_over_lambda"
    assert result.columns[-1] == "status"
    values = [float(r["r_over_lambda"]) for r in result.rows]
    assert values == sorted(values)
    regimes = [r["regime"] for r in result.rows]
    assert regimes[0] == "short" and regimes[-1] == "long"
    for row in result.rows:
        for col in ("F_A_rho", "F_B_rho", "F_net", "U_A", "U_B"):
            assert np.isfinite(float(row[col]))


def test_vacuum_ground_sweep_all_resonant_columns_zero(tmp_path):
    path = tmp_path / "vac.toml"
    path.write_text(VACUUM_SWEEP)
    result = scan.run_sweep(scan.load_config(path))
    for row in result.rows:
        assert float(row["U_A"]) == 0.0
        assert float(row["U_B"]) == 0.0


def test_determinism_across_runs_and_workers(mini_config, tmp_path):
    config = scan.load_config(mini_config)
    outputs = []
    for workers in (1, 1, 3):
        result = scan.run_sweep(config, workers=workers)
        out = tmp_path / f"out_{len(outputs)}.csv"
        scan.write_csv(result, out)
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]


def test_fast_mode_matches_exact_in_validated_regimes(mini_config):
    # short regime: the closed form is tight (x^2 corrections, up to
    # ~1% at the x = 0.1 boundary); long regime: pointwise deviations
    # are O(1/x) of the envelope near generic phase, so only an
    # envelope-scale sanity bound applies there
    config = scan.load_config(mini_config)
    exact = scan.run_sweep(config)
    fast = scan.run_sweep(config, fast=True)
    for row_e, row_f in zip(exact.rows, fast.rows):
        f_e = float(row_e["F_A_rho"])
        f_f = float(row_f["F_A_rho"])
        scale = max(abs(f_e), abs(float(row_e["F_B_rho"])))
        if row_e["regime"] == "short":
            assert abs(f_e - f_f) < 0.02 * scale
        elif row_e["regime"] == "long":
            assert abs(f_e - f_f) < 0.25 * scale


def test_si_units_mode(mini_config):
    config = scan.load_config(mini_config)
    nat = scan.run_sweep(config)
    si = scan.run_sweep(config, unit_mode="si")
    assert si.units_row[1] == "N"
    # ratio equals the natural->SI force factor
    from vdwlight import units
    ctx = units.UnitSystem(omega_ref=units.ev_to_angular(1.59))
    factor = units.force_natural_to_si(1.0, ctx)
    for row_n, row_s in zip(nat.rows, si.rows):
        assert float(row_s["F_A_rho"]) == pytest.approx(
            float(row_n["F_A_rho"]) * factor, rel=1e-12)


def test_csv_layout(mini_config, tmp_path):
    result = scan.run_sweep(scan.load_config(mini_config))
    out = tmp_path / "mini.csv"
    scan.write_csv(result, out)
    lines = out.read_text().splitlines()
    assert lines[0].startswith("r_over_lambda,")
    assert lines[1].startswith("#units,")
    assert len(lines) == 2 + 7
    manifest = out.with_suffix(".csv.manifest.json")
    assert manifest.exists()
    assert "code_version" in manifest.read_text()


def test_point_failure_flags_row_and_exit_status(tmp_path, monkeypatch):
    path = tmp_path / "mini.toml"
    path.write_text(MINI_SWEEP)
    config = scan.load_config(path)

    from vdwlight import scan as scan_mod
    original = scan_mod.evaluate_point
    def sabotaged(scene, value, fast=False):
        if abs(value - 0.01) < 1e-12:
            raise RuntimeError("synthetic point failure")
        return original(scene, value, fast=fast)
    monkeypatch.setattr(scan_mod, "evaluate_point", sabotaged)

    result = scan_mod.run_sweep(config)
    assert result.n_failures == 1
    assert result.rows[0]["status"] == "error"
    assert result.rows[0]["F_A_rho"] == ""
    assert result.rows[1]["status"] == "ok"
    out = tmp_path / "f.csv"
    scan_mod.write_csv(result, out)

    monkeypatch.setattr(sys, "argv",
                        ["vdw", "sweep", "--config", str(path),
                         "--out", str(tmp_path / "cli.csv")])
    assert cli_main(sys.argv[1:]) == 2


def test_cli_end_to_end(tmp_path):
    out = tmp_path / "cli.csv"
    code = cli_main(["sweep", "--preset", "fig2a", "--out", str(out),
                     "--workers", "2"])
    assert code == 0
    assert out.exists()
    lines = out.read_text().splitlines()
    assert len(lines) == 2 + 201


def test_cli_validate_and_presets(capsys):
    assert cli_main(["presets"]) == 0
    captured = capsys.readouterr()
    assert "fig1f" in captured.out
    assert cli_main(["validate", "--preset", "fig3a"]) == 0


def test_cli_module_invocation(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "vdwlight.cli", "validate", "--preset",
         "fig1a"], capture_output=True, text=True)
    assert result.returncode == 0
    assert "config valid" in result.stdout
