import csv
import json
import math

import pytest

from main import build_parser, main


def _read_csv(path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))



# -----------------------------------------------------
# preset / sweep
# -----------------------------------------------------
def test_preset_writes_csv(tmp_path):
    out = tmp_path / "fig2.csv"
    assert main(["preset", "fig2", "--output", str(out)]) == 0
    rows = _read_csv(out)
    assert len(rows) == 603
    assert max(float(row["fisher"]) for row in rows) == pytest.approx(198.01, rel=1e-9)
    assert all(row["dphi_diff_rad"] == "" and row["kappa"] == "" for row in rows)


@pytest.mark.parametrize("name", ["fig3", "fig5", "fig6", "fig7"])
def test_preset_output_is_byte_identical(tmp_path, name):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["preset", name, "--n-points", "21", "--output", str(first)]) == 0
    assert main(["preset", name, "--n-points", "21", "--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert b"\r\n" not in first.read_bytes()


def test_sweep_with_overlays_in_degrees(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main([
        "sweep", "--scenario", "dual_coherent", "--alpha", "10", "--beta", "9.9",
        "--sweep-var", "t_squared", "--lo", "0", "--hi", "1", "--n-points", "11",
        "--overlay", "label=a,delta_theta=0", "--overlay", "label=b,delta_theta=30",
        "--degrees", "--output", str(out),
    ])
    assert code == 0
    rows = _read_csv(out)
    assert len(rows) == 22
    assert [row["label"] for row in rows[::11]] == ["a", "b"]
    balanced_a = next(row for row in rows if row["label"] == "a" and float(row["x_t_squared"]) == 0.5)
    assert float(balanced_a["fisher"]) == pytest.approx(198.01, rel=1e-9)


def test_sweep_converts_angle_range_in_degrees(tmp_path):
    out = tmp_path / "sweep.csv"
    code = main([
        "sweep", "--scenario", "coh_sqz", "--alpha", "2", "--r", "0.5",
        "--sweep-var", "delta_theta", "--lo", "0", "--hi", "180", "--n-points", "3",
        "--degrees", "--output", str(out),
    ])
    assert code == 0
    rows = _read_csv(out)
    assert float(rows[-1]["x_delta_theta_rad"]) == pytest.approx(math.pi)
    assert rows[0]["kappa"] != ""


def test_config_file_supplies_defaults_and_flags_win(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text(
        "# dual coherent, delta theta sweep\n"
        "scenario = dual_coherent\n"
        "alpha = 10\n"
        "beta = 2\n"
        "sweep-var = delta_theta\n"
        "lo = 0\n"
        "hi = 3.141592653589793\n"
        "n-points = 3\n",
        encoding="utf-8",
    )
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", str(cfg), "--beta", "8", "--output", str(out)]) == 0
    rows = _read_csv(out)
    assert len(rows) == 3
    assert float(rows[0]["fisher"]) == pytest.approx(164.0, rel=1e-9)


def test_config_file_boolean_and_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("degrees = yes\ncolour = red\n", encoding="utf-8")
    assert main(["optimum", "--config", str(cfg), "--scenario", "coh_sqz"]) == 1
    assert "unknown config key 'colour'" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--sweep-var", "t_squared", "--lo", "0", "--hi", "1", "--output", "x.csv"],
        ["sweep", "--scenario", "dual_coherent", "--sweep-var", "theta", "--lo", "0", "--hi", "1", "--output", "x.csv"],
        ["sweep", "--scenario", "dual_coherent", "--sweep-var", "t_squared", "--lo", "0", "--hi", "1", "--overlay", "oops", "--output", "x.csv"],
        ["preset", "fig9", "--output", "x.csv"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_with_one(tmp_path, monkeypatch, capsys, argv):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_bad_thread_setting_exits_with_one(monkeypatch, capsys):
    monkeypatch.setenv("QFI_MZI_THREADS", "many")
    assert main(["optimum", "--scenario", "coh_sqz", "--alpha", "10", "--r", "2.3"]) == 1
    assert "QFI_MZI_THREADS" in capsys.readouterr().err


def test_every_subcommand_is_registered():
    _, commands = build_parser()
    assert sorted(commands) == ["optimum", "preset", "sweep", "verify"]



# -----------------------------------------------------
# verify
# -----------------------------------------------------
def test_verify_passes_on_default_envelope(tmp_path, capsys):
    report_path = tmp_path / "verify.json"
    assert main(["verify", "--n-draws", "5", "--output", str(report_path)]) == 0
    assert capsys.readouterr().out.startswith("PASS draws=15")
    report = json.loads(report_path.read_text(encoding="utf-8"))
    assert report["passed"] is True
    assert report["worst_error"] <= 1e-6


def test_verify_without_draws(capsys):
    assert main(["verify", "--n-draws", "0"]) == 0
    assert capsys.readouterr().out.startswith("PASS draws=0")


def test_verify_refuses_large_amplitudes(capsys):
    assert main(["verify", "--alpha-max", "10"]) == 1
    assert "alpha_max" in capsys.readouterr().err



# -----------------------------------------------------
# optimum
# -----------------------------------------------------
def _optimum(capsys, *argv):
    assert main(["optimum", *argv]) == 0
    return json.loads(capsys.readouterr().out)


def test_optimum_compensating_mismatch(capsys):
    report = _optimum(capsys, "--scenario", "dual_coherent", "--alpha", "10", "--beta", "5", "--t-squared", "0.75")
    assert report["delta_theta_opt"] == pytest.approx(-0.447832, abs=1e-6)
    assert report["fisher"] == pytest.approx(125.0, rel=1e-10)
    assert report["notes"] == []


def test_optimum_without_compensation_is_not_an_error(capsys):
    report = _optimum(capsys, "--scenario", "dual_coherent", "--alpha", "10", "--beta", "2", "--t-squared", "0.75")
    assert report["delta_theta_opt"] is None
    assert any(note.startswith("no solution") for note in report["notes"])


def test_optimum_best_transmission(capsys):
    report = _optimum(capsys, "--scenario", "dual_coherent", "--alpha", "10", "--beta", "5", "--delta-theta", "90", "--degrees")
    assert report["t_squared_opt"]["value"] == pytest.approx(0.1, abs=1e-12)
    assert report["fisher"] == pytest.approx(125.0, rel=1e-10)


def test_optimum_coh_sqz_threshold(capsys, tmp_path):
    out = tmp_path / "optimum.json"
    report = _optimum(capsys, "--scenario", "coh_sqz", "--alpha", "10", "--r", "2.3", "--output", str(out))
    assert report["delta_theta_lim"] == pytest.approx(2.767106, abs=1e-6)
    assert report["fisher_max"] == pytest.approx(9972.81, abs=0.01)
    assert report["kappa"]["regime"] == "balanced_optimal"
    assert report["best_tau"] == pytest.approx([math.pi / 4])
    assert json.loads(out.read_text(encoding="utf-8")) == report


def test_optimum_sqzcoh_matching(capsys):
    report = _optimum(capsys, "--scenario", "sqzcoh_sqz", "--alpha", "10", "--r", "2.3", "--z", "2.3", "--phi", "3.141592653589793")
    assert report["fisher_max"] == pytest.approx(12422.2, abs=0.05)
    assert report["fisher"] == pytest.approx(12422.2, abs=0.05)
    assert report["mean_photon_number"] == pytest.approx(148.75, abs=0.01)
    assert report["matching_phases"] == pytest.approx({"theta": 0.0, "phi": -math.pi})
    assert report["kappa_root_delta_theta"] is not None
