import csv
import json

import pytest

from tyke import __version__
from tyke.core.planck import sample_curve
from tyke.core.quantization import smallest_resistance
from tyke.commands.quantization_commands import QuantizeCommand
from tyke.main import EXIT_INTERNAL, EXIT_IO, EXIT_OK, EXIT_VALIDATION, run
from tyke.models import WavelengthGrid


def _rows(path):
    with open(path, newline="") as f:
        return list(csv.reader(f))


@pytest.fixture
def pairs_file(tmp_path):
    path = tmp_path / "pairs.csv"
    path.write_text("t_post_s,t_pre_s\n0.010,0.005\n0.005,0.010\n0.020,0.020\n")
    return path


def test_version(capsys):
    assert run(["--version"]) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_missing_subcommand_is_usage_error():
    assert run([]) == EXIT_VALIDATION


def test_unknown_flag_is_usage_error():
    assert run(["planck", "--no-such-flag"]) == EXIT_VALIDATION


def test_planck_writes_one_csv_per_temperature(tmp_path):
    output = tmp_path / "planck.csv"
    assert run(["planck", "--output", str(output)]) == EXIT_OK
    for temperature in ("4500", "6000", "7500"):
        rows = _rows(tmp_path / f"planck_T{temperature}.csv")
        assert rows[0] == ["wavelength_m", "intensity"]
        assert len(rows) == 301
        assert float(rows[1][0]) == 1e-9


def test_planck_json_lists_peaks(tmp_path):
    output = tmp_path / "planck.json"
    assert run(["planck", "--format", "json", "--temperatures", "6000", "--output", str(output)]) == EXIT_OK
    payload = json.loads(output.read_text())
    assert len(payload["curves"]) == 1
    assert payload["curves"][0]["peak_wavelength_m"] == pytest.approx(481e-9)
    assert payload["config"]["count"] == 300


def test_planck_svg(tmp_path):
    output = tmp_path / "planck.svg"
    assert run(["planck", "--format", "svg", "--output", str(output)]) == EXIT_OK
    svg = output.read_text()
    assert svg.count("<polyline") == 3


def test_spike_train_csv(tmp_path):
    output = tmp_path / "train.csv"
    assert run(["spike-train", "--output", str(output)]) == EXIT_OK
    rows = _rows(output)
    assert rows[0] == ["time_s", "potential_v", "segment_id"]
    assert len(rows) == 2401
    assert all(float(row[1]) == 0.0 and row[2] == "0" for row in rows[1:301])
    assert rows[-1][2] == "7"


def test_spike_train_is_byte_identical_across_runs(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["spike-train", "--output", str(first)]) == EXIT_OK
    assert run(["spike-train", "--output", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_spike_train_json_segments(tmp_path):
    output = tmp_path / "train.json"
    assert run(["spike-train", "--format", "json", "--temperatures", "5000,6000", "--output", str(output)]) == EXIT_OK
    payload = json.loads(output.read_text())
    assert [segment["temperature_k"] for segment in payload["segments"]] == [5000.0, 6000.0]
    assert len(payload["potential_v"]) == 900


def test_quantize_requires_charge(tmp_path):
    assert run(["quantize", "--output", str(tmp_path / "q.csv")]) == EXIT_VALIDATION


def test_quantize_ladder(tmp_path):
    output = tmp_path / "q.csv"
    assert run(["quantize", "--charge", "1.60218e-19", "--n-max", "4", "--output", str(output)]) == EXIT_OK
    rows = _rows(output)
    assert rows[0] == ["n", "resistance_ohm", "tyke_potential_v"]
    assert [row[0] for row in rows[1:]] == ["1", "2", "3", "4"]
    assert float(rows[1][1]) == pytest.approx(25813.0, rel=1e-4)


def test_stdp_trajectory(tmp_path, pairs_file):
    output = tmp_path / "w.csv"
    assert run(["stdp", "--pairs", str(pairs_file), "--output", str(output)]) == EXIT_OK
    rows = _rows(output)
    assert rows[0] == ["event", "delta_w", "w"]
    assert rows[1] == ["0", "0.0", "0.5"]
    assert float(rows[2][2]) == pytest.approx(0.5606531, abs=1e-7)
    assert float(rows[4][1]) == 0.0


def test_stdp_bad_pairs_file(tmp_path):
    pairs = tmp_path / "pairs.csv"
    pairs.write_text("0.01,nope\n")
    assert run(["stdp", "--pairs", str(pairs), "--output", str(tmp_path / "w.csv")]) == EXIT_VALIDATION


def test_stdp_missing_pairs_file_is_io_error(tmp_path):
    assert run(["stdp", "--pairs", str(tmp_path / "absent.csv"), "--output", str(tmp_path / "w.csv")]) == EXIT_IO


def test_memristor_sweep(tmp_path):
    output = tmp_path / "m.csv"
    assert run(["memristor", "--flux-count", "51", "--output", str(output)]) == EXIT_OK
    rows = _rows(output)
    assert len(rows) == 52
    assert float(rows[-1][1]) == pytest.approx(100 * 0.5 ** 0.5)


def test_memristor_saturation_is_validation_error(tmp_path):
    assert run(["memristor", "--flux-count", "102", "--output", str(tmp_path / "m.csv")]) == EXIT_VALIDATION


def test_evaluate_default_passes(tmp_path):
    output = tmp_path / "eval.json"
    assert run(["evaluate", "--output", str(output)]) == EXIT_OK
    report = json.loads(output.read_text())
    assert report["total"] == 300
    assert report["matched"] == 300
    assert report["fraction"] == 1.0
    assert report["passed"] is True
    assert report["config"]["tolerance"] == 1e-6


def test_evaluate_below_threshold_exits_one(tmp_path):
    assert run(["evaluate", "--threshold", "1.01", "--output", str(tmp_path / "eval.json")]) == 1


def test_evaluate_self_check(tmp_path):
    output = tmp_path / "eval.json"
    assert run(["evaluate", "--self-check", "--output", str(output)]) == EXIT_OK
    assert json.loads(output.read_text())["fraction"] == 1.0


def test_evaluate_radiance_fails_threshold(tmp_path):
    assert run(["evaluate", "--variant", "radiance", "--output", str(tmp_path / "eval.json")]) == 1


def test_evaluate_csv_to_stdout(capsys):
    assert run(["evaluate", "--format", "csv", "--output", "-"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "total,matched,fraction,tolerance,threshold,passed"
    assert lines[1].startswith("300,300,1.0,")


def test_evaluate_svg_overlays_model_and_reference(tmp_path):
    output = tmp_path / "eval.svg"
    assert run(["evaluate", "--format", "svg", "--temperatures", "6000", "--output", str(output)]) == EXIT_OK
    svg = output.read_text()
    assert svg.count("<polyline") == 2
    # one marker per matched point plus the legend marker
    assert svg.count("<circle") == 301
    assert "Matched Points: 300/300" in svg


def test_evaluate_svg_marks_only_matched_points(tmp_path):
    output = tmp_path / "eval.svg"
    args = ["evaluate", "--format", "svg", "--variant", "radiance", "--temperatures", "6000", "--output", str(output)]
    assert run(args) == 1
    svg = output.read_text()
    assert svg.count("<circle") < 301
    assert "Matched Points: 300/300" not in svg


def test_config_file_supplies_defaults(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"count": 20, "lambda_step": 1e-7}))
    output = tmp_path / "train.csv"
    assert run(["--config", str(config), "spike-train", "--temperatures", "6000", "--output", str(output)]) == EXIT_OK
    assert len(_rows(output)) == 41


def test_flags_override_config_file(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"count": 20}))
    output = tmp_path / "train.csv"
    args = ["--config", str(config), "spike-train", "--count", "10", "--temperatures", "6000", "--output", str(output)]
    assert run(args) == EXIT_OK
    assert len(_rows(output)) == 21


def test_broken_config_file(tmp_path):
    config = tmp_path / "run.json"
    config.write_text("{not json")
    assert run(["--config", str(config), "planck", "--output", str(tmp_path / "p.csv")]) == EXIT_VALIDATION


def test_missing_config_file_is_io_error(tmp_path):
    assert run(["--config", str(tmp_path / "absent.json"), "planck"]) == EXIT_IO


def test_invalid_grid_is_validation_error(tmp_path):
    assert run(["planck", "--count", "0", "--output", str(tmp_path / "p.csv")]) == EXIT_VALIDATION


def test_unwritable_output_is_io_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run(["memristor", "--output", str(blocker / "m.csv")]) == EXIT_IO


def test_constants_preset_changes_output(tmp_path):
    listing, prose = tmp_path / "l.csv", tmp_path / "p.csv"
    assert run(["quantize", "--charge", "1.6e-19", "--output", str(listing)]) == EXIT_OK
    assert run(["--constants", "prose", "quantize", "--charge", "1.6e-19", "--output", str(prose)]) == EXIT_OK
    assert listing.read_bytes() != prose.read_bytes()


@pytest.mark.parametrize(
    "args",
    [
        ["planck", "--format", "json"],
        ["planck", "--format", "svg"],
        ["spike-train", "--format", "json"],
        ["quantize", "--charge", "1.60218e-19"],
        ["memristor", "--format", "json"],
        ["evaluate"],
        ["evaluate", "--format", "csv"],
        ["evaluate", "--format", "svg", "--temperatures", "6000"],
        ["memristor"],
    ],
)
def test_repeated_runs_are_byte_identical(tmp_path, args):
    suffix = args[args.index("--format") + 1] if "--format" in args else "out"
    first, second = tmp_path / f"a.{suffix}", tmp_path / f"b.{suffix}"
    assert run(args + ["--output", str(first)]) in (EXIT_OK, 1)
    assert run(args + ["--output", str(second)]) in (EXIT_OK, 1)
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_stdp_runs_are_byte_identical(tmp_path, pairs_file, fmt):
    first, second = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
    for output in (first, second):
        assert run(["stdp", "--pairs", str(pairs_file), "--format", fmt, "--output", str(output)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_planck_single_point_curve(tmp_path):
    output = tmp_path / "p.csv"
    assert run(["planck", "--temperatures", "6000", "--count", "1", "--output", str(output)]) == EXIT_OK
    assert len(_rows(tmp_path / "p_T6000.csv")) == 2


def test_planck_csv_reads_back_at_full_precision(tmp_path):
    assert run(["planck", "--temperatures", "4500", "--output", str(tmp_path / "p.csv")]) == EXIT_OK
    rows = _rows(tmp_path / "p_T4500.csv")[1:]
    curve = sample_curve(WavelengthGrid(start=1e-9, step=10e-9, count=300), 4500.0)
    assert tuple(float(row[1]) for row in rows) == curve.values


def test_quantize_single_rung(tmp_path):
    output = tmp_path / "q.csv"
    assert run(["quantize", "--charge", "1.60218e-19", "--n-max", "1", "--output", str(output)]) == EXIT_OK
    rows = _rows(output)
    assert len(rows) == 2
    assert float(rows[1][1]) == smallest_resistance(1.60218e-19)


def test_stdp_empty_pairs_file(tmp_path):
    pairs = tmp_path / "pairs.csv"
    pairs.write_text("")
    output = tmp_path / "w.csv"
    assert run(["stdp", "--pairs", str(pairs), "--w0", "0.25", "--output", str(output)]) == EXIT_OK
    assert _rows(output) == [["event", "delta_w", "w"], ["0", "0.0", "0.25"]]


def test_planck_csv_runs_are_byte_identical(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    for directory in (first, second):
        assert run(["planck", "--output", str(directory / "p.csv")]) == EXIT_OK
    names = sorted(path.name for path in first.iterdir())
    assert names == ["p_T4500.csv", "p_T6000.csv", "p_T7500.csv"]
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_planck_rejects_duplicate_temperatures(tmp_path):
    assert run(["planck", "--temperatures", "6000,6000", "--output", str(tmp_path / "p.csv")]) == EXIT_VALIDATION
    assert not list(tmp_path.iterdir())


def test_planck_file_tags_keep_full_temperature(tmp_path):
    assert run(["planck", "--temperatures", "12345.6,12345.64", "--output", str(tmp_path / "p.csv")]) == EXIT_OK
    assert sorted(path.name for path in tmp_path.iterdir()) == ["p_T12345.6.csv", "p_T12345.64.csv"]


def test_planck_csv_to_stdout_is_one_document(capsys):
    assert run(["planck", "--count", "2", "--output", "-"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "temperature_k,wavelength_m,intensity"
    assert len(lines) == 7
    assert [line.split(",")[0] for line in lines[1:]] == ["4500.0"] * 2 + ["6000.0"] * 2 + ["7500.0"] * 2


def test_quantize_charge_below_float_range_is_validation_error(tmp_path):
    assert run(["quantize", "--charge", "1e-170", "--output", str(tmp_path / "q.csv")]) == EXIT_VALIDATION


def test_memristor_nan_flux_is_validation_error(tmp_path):
    output = tmp_path / "m.csv"
    assert run(["memristor", "--flux-step", "nan", "--output", str(output)]) == EXIT_VALIDATION
    assert not output.exists()


def test_unknown_log_level_is_validation_error(tmp_path):
    assert run(["--log-level", "chatty", "memristor", "--output", str(tmp_path / "m.csv")]) == EXIT_VALIDATION
    assert run(["--log-level", "debug", "memristor", "--output", str(tmp_path / "m.csv")]) == EXIT_OK


def test_unknown_log_level_in_config_file(tmp_path):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({"log_level": "chatty"}))
    assert run(["--config", str(config), "memristor", "--output", str(tmp_path / "m.csv")]) == EXIT_VALIDATION


def test_unexpected_error_has_its_own_exit_code(tmp_path, monkeypatch):
    def fail(self, settings):
        raise RuntimeError("boom")

    monkeypatch.setattr(QuantizeCommand, "_execute", fail)
    assert run(["quantize", "--charge", "1.6e-19", "--output", str(tmp_path / "q.csv")]) == EXIT_INTERNAL


def test_help_lists_commands_by_category(capsys):
    assert run(["--help"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "commands by category:" in out
    assert "  synapse:" in out
    assert out.index("stdp") < out.index("memristor")
