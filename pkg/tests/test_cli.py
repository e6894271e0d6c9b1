import json
import math
import subprocess
import sys

import pytest


def run_cli(*argv):
    return subprocess.run([sys.executable, "-m", "casimir_plasma", *argv],
                          capture_output=True, text=True)


def test_version():
    result = run_cli("--version")
    assert result.returncode == 0
    assert "casimir-plasma" in result.stdout
    assert "0.1.0" in result.stdout


def test_compute_without_ions_reports_zero_ion_pressure():
    result = run_cli("compute", "--kappa", "0", "--units", "natural",
                     "--temperature", "10", "--gap", "1")
    assert result.returncode == 0
    record = json.loads(result.stdout)
    assert record["pressure"]["pi_ion"] == 0.0
    assert record["pressure"]["pi_total"] == record["pressure"]["pi_em"]
    assert record["tool"] == "casimir-plasma"


def test_compute_si_zero_mode_pascals():
    result = run_cli("compute", "--units", "si", "--temperature", "300",
                     "--gap", "1e-6", "--kappa", "0")
    assert result.returncode == 0
    record = json.loads(result.stdout)
    pascals = record["pressure_pa"]["pi_em_zero_mode_Pa"]
    assert abs(pascals - (-3.96e-4)) / 3.96e-4 < 5e-3


def test_compute_oracle_deltas_small():
    result = run_cli("compute", "--units", "natural",
                     "--temperature", str(1 / (2 * math.pi)),
                     "--gap", "1", "--kappa", "1", "--oracle")
    assert result.returncode == 0
    record = json.loads(result.stdout)
    for delta in record["oracle_deltas"].values():
        assert delta < 1e-8


def test_compute_json_round_trip():
    result = run_cli("compute", "--kappa", "0.5", "--temperature", "1", "--gap", "1")
    record = json.loads(result.stdout)
    assert json.loads(json.dumps(record)) == record


def test_species_file_drives_kappa(tmp_path):
    path = tmp_path / "species.json"
    path.write_text(json.dumps([{"charge": 0.5, "density": 0.4},
                                {"charge": -0.5, "density": 0.4}]))
    result = run_cli("compute", "--temperature", "2.0", "--gap", "1",
                     "--species", str(path))
    assert result.returncode == 0
    record = json.loads(result.stdout)
    expected = math.sqrt(2 * 0.25 * 0.4 / 2.0)
    assert record["state"]["kappa"] == pytest.approx(expected, rel=1e-12)


def test_missing_kappa_and_species_exit_2():
    result = run_cli("compute", "--temperature", "1", "--gap", "1")
    assert result.returncode == 2
    assert "kappa" in result.stderr


def test_argparse_usage_error_exit_2():
    result = run_cli("compute", "--temperature", "1")  # missing --gap
    assert result.returncode == 2


def test_kappa_and_species_conflict_exit_2(tmp_path):
    path = tmp_path / "species.json"
    path.write_text('[{"charge": 1, "density": 1}, {"charge": -1, "density": 1}]')
    result = run_cli("compute", "--temperature", "1", "--gap", "1",
                     "--kappa", "1", "--species", str(path))
    assert result.returncode == 2


def test_bad_species_file_exit_2(tmp_path):
    path = tmp_path / "species.json"
    path.write_text('[{"charge": 1, "density": 1.0}]')
    result = run_cli("compute", "--temperature", "1", "--gap", "1",
                     "--species", str(path))
    assert result.returncode == 2
    assert "electroneutral" in result.stderr


def test_numerical_failure_exit_3():
    # T*L so small the thermal sum cannot fit its term budget
    result = run_cli("compute", "--temperature", "1e-9", "--gap", "1", "--kappa", "0")
    assert result.returncode == 3
    assert "numerical error" in result.stderr


def test_compare_golden_ratios():
    result = run_cli("compare", "--temperature", "1", "--gap", "1", "--kappa", "10")
    assert result.returncode == 0
    assert "schwinger_to_lifshitz_ratio 2.000000" in result.stdout
    assert "screened_to_lifshitz_ratio 1.000000" in result.stdout


def test_compare_without_ions_screened_equals_schwinger():
    result = run_cli("compare", "--temperature", "1", "--gap", "1", "--kappa", "0")
    values = {}
    for line in result.stdout.splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0].endswith(("zero_mode", "total")):
            values[parts[0]] = float(parts[1])
    assert values["ion_screened_total"] == values["schwinger_zero_mode"]


def test_sweep_csv_byte_stable(tmp_path):
    args = ("sweep", "--axis", "kappa", "--start", "0.001", "--stop", "10",
            "--points", "20", "--spacing", "log", "--temperature", "1", "--gap", "1")
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli(*args, "--output", str(first)).returncode == 0
    assert run_cli(*args, "--output", str(second)).returncode == 0
    assert first.read_bytes() == second.read_bytes()
    lines = first.read_bytes().decode("ascii").split("\r\n")
    assert lines[0] == "axis_value,pi_ion,pi_em,pi_em_zero,pi_total"
    assert len(lines) == 22  # header + 20 rows + trailing newline
    ion = [float(line.split(",")[1]) for line in lines[1:-1]]
    assert all(a < b for a, b in zip(ion, ion[1:]))


def test_sweep_stdout_json():
    result = run_cli("sweep", "--axis", "gap", "--start", "1", "--stop", "2",
                     "--points", "2", "--format", "json",
                     "--temperature", "1", "--kappa", "0")
    assert result.returncode == 0
    rows = json.loads(result.stdout)
    assert len(rows) == 2
    assert rows[0]["axis_value"] == 1.0


def test_sweep_config_file(tmp_path):
    config = {"axis": "temperature", "start": 0.1, "stop": 1.0, "points": 3,
              "spacing": "log", "gap": 1.0, "kappa": 0.0}
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(config))
    result = run_cli("sweep", "--config", str(path))
    assert result.returncode == 0
    lines = result.stdout.splitlines()  # text mode translates the CRLFs
    assert lines[0] == "axis_value,pi_ion,pi_em,pi_em_zero,pi_total"
    assert len(lines) == 4  # header + 3 rows


def test_sweep_flag_overrides_config(tmp_path):
    config = {"axis": "gap", "start": 1.0, "stop": 2.0, "points": 3,
              "temperature": 1.0, "kappa": 0.0}
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(config))
    result = run_cli("sweep", "--config", str(path), "--points", "5")
    assert result.returncode == 0
    assert len(result.stdout.splitlines()) == 6  # header + 5 rows


def test_sweep_missing_axis_exit_2():
    result = run_cli("sweep", "--start", "1", "--stop", "2", "--points", "2",
                     "--temperature", "1", "--kappa", "0")
    assert result.returncode == 2


def test_sweep_unwritable_output_exit_4(tmp_path):
    target = tmp_path / "missing_dir" / "out.csv"
    result = run_cli("sweep", "--axis", "gap", "--start", "1", "--stop", "2",
                     "--points", "2", "--temperature", "1", "--kappa", "0",
                     "--output", str(target))
    assert result.returncode == 4


def test_report_writes_csv_and_figures(tmp_path):
    prefix = tmp_path / "scan"
    result = run_cli("report", "--axis", "kappa", "--start", "0.01", "--stop", "10",
                     "--points", "12", "--spacing", "log",
                     "--temperature", "1", "--gap", "1", "--output", str(prefix))
    assert result.returncode == 0
    for name in ("scan.csv", "scan_components.png", "scan_screening.png"):
        path = tmp_path / name
        assert path.exists() and path.stat().st_size > 0
        assert str(path) in result.stdout


def test_report_total_figure_for_gap_axis(tmp_path):
    prefix = tmp_path / "gapscan"
    result = run_cli("report", "--axis", "gap", "--start", "0.5", "--stop", "2",
                     "--points", "6", "--temperature", "1", "--kappa", "0",
                     "--output", str(prefix))
    assert result.returncode == 0
    assert (tmp_path / "gapscan_total.png").exists()
