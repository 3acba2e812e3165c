"""
Integration Tests
Tests end-to-end workflows: config → experiment → CSV and summary files → command line
"""

import csv
import os
import sys

import pytest

# Add project root to Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)

if project_root not in sys.path:
    sys.path.insert(0, project_root)

import run as cli
from controllers.experiment_config import parse_config, parse_seeds
from controllers.experiment_runner import (
    PAIRED_SUMMARY_FILE, SUMMARY_FILE, run_experiment, write_round_csv
)
from models.exceptions import InvalidConfigurationError, OutputWriteError
from models.round_metrics import CSV_HEADER
from models.network_model import FieldConfig
from models.simulation import SimulationConfig, run

HEADER_LINE = "round,alive,asleep,heads,packets_to_sink,residual_total_j,e_th_j,savings_total_j"


def read_summary(path):
    """Parse a key=value summary file."""
    entries = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            key, value = line.rstrip("\n").split("=", 1)
            entries[key] = value
    return entries


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.reader(handle, strict=True))


# ===== CONFIG PARSING =====
def test_empty_config_gives_defaults():
    """Test no file and no flags resolve to the default experiment."""
    spec = parse_config("")
    config = spec.get_simulation_config()
    assert config.get_field().get_node_count() == 100
    assert config.get_field().get_width() == 100.0
    assert config.get_field().get_height() == 100.0
    assert config.get_field().get_initial_energy() == 0.5
    assert config.get_protocol().get_p() == 0.1
    assert config.get_radio().get_d0_mode() == "derived"
    assert config.get_max_rounds() == 10000
    assert spec.get_protocol() == "LEACH"
    assert spec.get_seeds() == [1]
    assert spec.arms() == [False]


def test_file_values_and_comments():
    """Test key=value lines, comments and blank lines."""
    text = "# experiment\nprotocol = teen\n\nehorm=yes  # sleep scheduling\nrounds=250\nseeds=1-3,7\nfield=200x50\n"
    spec = parse_config(text)
    config = spec.get_simulation_config()
    assert spec.get_protocol() == "TEEN"
    assert spec.is_ehorm() is True
    assert spec.get_max_rounds() == 250
    assert spec.get_seeds() == [1, 2, 3, 7]
    assert config.get_field().get_width() == 200.0
    assert config.get_field().get_sink_position() == (100.0, 25.0)


def test_max_rounds_alias():
    """Test max_rounds is accepted for rounds."""
    assert parse_config("max_rounds=42").get_max_rounds() == 42


def test_unparsable_value_names_key_and_line():
    """Test a bad value reports its key and line."""
    with pytest.raises(InvalidConfigurationError) as error:
        parse_config("# header\nnodes=abc\n")
    assert error.value.get_field() == "nodes"
    assert error.value.get_line() == 2
    assert "nodes" in error.value.get_message()


def test_unknown_key_is_an_error():
    """Test unknown keys are rejected with their line."""
    with pytest.raises(InvalidConfigurationError) as error:
        parse_config("nodes=10\ncolour=blue\n")
    assert error.value.get_field() == "colour"
    assert error.value.get_line() == 2


def test_constraint_violation_names_key_and_line():
    """Test a parsable but invalid value reports its key and line."""
    with pytest.raises(InvalidConfigurationError) as error:
        parse_config("protocol=sep\np=1.5\n")
    assert error.value.get_field() == "p"
    assert error.value.get_line() == 2


def test_flags_override_file():
    """Test a flag wins over the file, which wins over defaults."""
    spec = parse_config("nodes=100\nrounds=50\n", {"nodes": "50"})
    assert spec.get_simulation_config().get_field().get_node_count() == 50
    assert spec.get_max_rounds() == 50


def test_heterogeneity_defaults_follow_protocol():
    """Test SEP and DEEC default to m=0.1, alpha=1 and LEACH to a homogeneous field."""
    sep_field = parse_config("protocol=sep").get_simulation_config().get_field()
    assert sep_field.get_hetero_fraction() == 0.1
    assert sep_field.get_hetero_alpha() == 1.0
    leach_field = parse_config("protocol=leach").get_simulation_config().get_field()
    assert leach_field.get_hetero_fraction() == 0.0
    explicit = parse_config("protocol=deec\nhetero_fraction=0.2").get_simulation_config().get_field()
    assert explicit.get_hetero_fraction() == 0.2


def test_seed_lists():
    """Test seed ranges and rejection of empty lists."""
    assert parse_seeds("1-30") == list(range(1, 31))
    assert parse_seeds("5, 2") == [5, 2]
    with pytest.raises(ValueError):
        parse_seeds(" , ")
    with pytest.raises(ValueError):
        parse_seeds("9-3")


def test_compare_mode_runs_both_arms():
    """Test compare mode schedules the base arm then the E-HORM arm."""
    spec = parse_config("compare=true\nseeds=4,5")
    assert spec.arms() == [False, True]
    configs = spec.configs_for(True)
    assert [config.get_seed() for config in configs] == [4, 5]
    assert all(config.get_label() == "iLEACH" for config in configs)


# ===== CSV OUTPUT =====
def test_zero_round_csv_is_header_only(tmp_path):
    """Test a run without rounds writes just the header."""
    path = tmp_path / "empty.csv"
    write_round_csv(run(SimulationConfig(FieldConfig(), max_rounds=0)), path)
    assert path.read_text(encoding="utf-8") == HEADER_LINE + "\n"


def test_unwritable_csv_raises(tmp_path):
    """Test write failures carry the path."""
    blocker = tmp_path / "blocker"
    blocker.write_text("not a directory", encoding="utf-8")
    target = blocker / "run.csv"
    with pytest.raises(OutputWriteError) as error:
        write_round_csv(run(SimulationConfig(FieldConfig(), max_rounds=0)), target)
    assert error.value.get_path() == str(target)
    assert str(target) in error.value.get_message()


# ===== END-TO-END EXPERIMENTS =====
def test_single_run_experiment(tmp_path):
    """Test a 10-round run writes a CSV of at most 10 rows and a summary."""
    spec = parse_config(f"rounds=10\nout={tmp_path}\nehorm=on\n")
    assert run_experiment(spec) == 0
    rows = read_rows(tmp_path / "iLEACH_seed1.csv")
    assert rows[0] == CSV_HEADER
    assert 1 <= len(rows) - 1 <= 10
    assert all(len(row) == 8 for row in rows)
    assert rows[1][:3] == ["0", "100", "0"]
    summary = read_summary(tmp_path / SUMMARY_FILE)
    assert summary["protocol"] == "LEACH"
    assert summary["ehorm"] == "true"
    assert summary["iLEACH.runs"] == "1"
    assert summary["iLEACH.seed_1.stability_period"] == "not_reached"
    assert not (tmp_path / PAIRED_SUMMARY_FILE).exists()


def test_compare_mode_file_count(tmp_path):
    """Test 30 paired seeds produce 60 CSV files and a paired summary."""
    spec = parse_config(f"protocol=sep\ncompare=true\nseeds=1-30\nrounds=5\nout={tmp_path}\n")
    assert run_experiment(spec) == 0
    csv_files = sorted(tmp_path.glob("*.csv"))
    assert len(csv_files) == 60
    assert (tmp_path / "SEP_seed30.csv").exists()
    assert (tmp_path / "iSEP_seed1.csv").exists()
    paired = read_summary(tmp_path / PAIRED_SUMMARY_FILE)
    assert paired["variant"] == "iSEP"
    assert paired["baseline"] == "SEP"
    assert paired["pairs"] == "30"
    assert "stability_win_rate" in paired
    assert "seed_17_stability_delta" in paired


def test_rerun_is_byte_identical(tmp_path):
    """Test the same config writes the same bytes twice."""
    outputs = []
    for name in ("first", "second"):
        out = tmp_path / name
        spec = parse_config(f"protocol=teen\ncompare=true\nseeds=1,2\nrounds=300\nout={out}\n")
        assert run_experiment(spec) == 0
        outputs.append({path.name: path.read_bytes() for path in sorted(out.iterdir())})
    assert outputs[0] == outputs[1]
    assert "iTEEN_seed2.csv" in outputs[0]


def test_summary_matches_csv_series(tmp_path):
    """Test summary milestones can be recomputed from the CSV alone."""
    spec = parse_config(f"protocol=deec\nseeds=1,2\nrounds=400\ninitial_energy=0.01\nout={tmp_path}\n")
    assert run_experiment(spec) == 0
    summary = read_summary(tmp_path / SUMMARY_FILE)
    for seed in (1, 2):
        rows = read_rows(tmp_path / f"DEEC_seed{seed}.csv")[1:]
        stability = next((row[0] for row in rows if int(row[1]) < 100), "not_reached")
        lifetime = next((row[0] for row in rows if int(row[1]) == 0), "not_reached")
        assert summary[f"DEEC.seed_{seed}.stability_period"] == stability
        assert summary[f"DEEC.seed_{seed}.network_lifetime"] == lifetime
        assert summary[f"DEEC.seed_{seed}.total_packets"] == rows[-1][4]
    assert stability != "not_reached"


def test_unwritable_output_directory(tmp_path):
    """Test an output path under a file exits with the I/O status."""
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    spec = parse_config(f"rounds=2\nout={blocker / 'results'}\n")
    assert run_experiment(spec) == 2


# ===== COMMAND LINE =====
def test_cli_success(tmp_path):
    """Test the command line runs an experiment and exits 0."""
    out = tmp_path / "cli"
    assert cli.main(["--protocol", "sep", "--ehorm", "on", "--rounds", "5", "--nodes", "20",
                     "--field", "50x50", "--seeds", "3", "--out", str(out)]) == 0
    rows = read_rows(out / "iSEP_seed3.csv")
    assert rows[1][1] == "20"


def test_cli_config_file_and_flags(tmp_path):
    """Test flags override the config file on the command line."""
    config_path = tmp_path / "experiment.conf"
    config_path.write_text(f"nodes=100\nrounds=3\nout={tmp_path / 'from_file'}\n", encoding="utf-8")
    out = tmp_path / "from_flag"
    assert cli.main(["--config", str(config_path), "--nodes", "10", "--out", str(out)]) == 0
    assert read_rows(out / "LEACH_seed1.csv")[1][1] == "10"
    assert not (tmp_path / "from_file").exists()


def test_cli_config_errors(tmp_path):
    """Test invalid values and unreadable config files exit 1."""
    assert cli.main(["--nodes", "abc", "--out", str(tmp_path)]) == 1
    assert cli.main(["--config", str(tmp_path / "missing.conf")]) == 1


def test_cli_output_error(tmp_path):
    """Test an unwritable output directory exits 2."""
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    assert cli.main(["--rounds", "2", "--out", str(blocker / "results")]) == 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
