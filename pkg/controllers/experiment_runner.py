"""
Experiment runner controller for the sensor network simulator.

Runs every seed of an ExperimentSpec (both arms in compare mode), writes
one per-round CSV per run, then a batch summary and, in compare mode, a
paired summary once all runs are done.
"""

import csv
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Union

from models.exceptions import InvalidConfigurationError, OutputWriteError
from models.round_metrics import CSV_HEADER, format_float
from models.simulation import SimulationResult, run_batch, summarize_batch

from .experiment_config import ExperimentSpec

logger = logging.getLogger(__name__)

NOT_REACHED = "not_reached"
SUMMARY_FILE = "summary.txt"
PAIRED_SUMMARY_FILE = "paired_summary.txt"

PathLike = Union[str, Path]


def result_filename(result: SimulationResult) -> str:
    """CSV file name of one run, e.g. 'iSEP_seed7.csv'."""
    return f"{result.get_label()}_seed{result.get_seed()}.csv"


def render_value(value: object) -> str:
    """Render a summary value: floats with 9 significant digits, None as not_reached."""
    if value is None:
        return NOT_REACHED
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def write_round_csv(result: SimulationResult, path: PathLike) -> None:
    """
    Write the per-round series of one run.

    Args:
        result (SimulationResult): Run to persist
        path (str or Path): Target file

    Raises:
        OutputWriteError: If the file cannot be written
    """
    path = Path(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for metrics in result.get_per_round():
                writer.writerow(metrics.to_csv_row())
    except OSError as error:
        raise OutputWriteError(str(path), error.strerror or str(error))
    logger.debug("Wrote %s", path)


def write_summary(entries: Mapping[str, object], path: PathLike) -> None:
    """
    Write key=value lines in the given order.

    Raises:
        OutputWriteError: If the file cannot be written
    """
    path = Path(path)
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            for key, value in entries.items():
                handle.write(f"{key}={render_value(value)}\n")
    except OSError as error:
        raise OutputWriteError(str(path), error.strerror or str(error))
    logger.info("Wrote %s", path)


def run_summary_entries(results: List[SimulationResult]) -> Dict[str, object]:
    """Per-run milestones keyed by label and seed."""
    entries: Dict[str, object] = {}
    for result in results:
        prefix = f"{result.get_label()}.seed_{result.get_seed()}"
        entries[f"{prefix}.stability_period"] = result.get_stability_period()
        entries[f"{prefix}.half_nodes_dead"] = result.get_half_nodes_dead()
        entries[f"{prefix}.network_lifetime"] = result.get_network_lifetime()
        entries[f"{prefix}.total_packets"] = result.get_total_packets()
        entries[f"{prefix}.dormant_round"] = result.get_dormant_round()
    return entries


def build_summary(spec: ExperimentSpec, arms: Dict[bool, List[SimulationResult]]) -> Dict[str, object]:
    """Config echo, then aggregate statistics per arm, then per-run milestones."""
    entries: Dict[str, object] = dict(spec.to_dict())
    for results in arms.values():
        summary = summarize_batch(results)
        for key, value in summary.to_dict().items():
            entries[f"{summary.get_label()}.{key}"] = value
    for results in arms.values():
        entries.update(run_summary_entries(results))
    return entries


def build_paired_summary(base: List[SimulationResult], variant: List[SimulationResult]) -> Dict[str, object]:
    """Win/tie/loss tallies and per-seed deltas of the E-HORM arm over the base arm."""
    comparison = summarize_batch(variant, baseline=base).get_comparison()
    return comparison.to_dict()


def run_experiment(spec: ExperimentSpec) -> int:
    """
    Run an experiment and persist its outputs.

    Args:
        spec (ExperimentSpec): Resolved experiment

    Returns:
        int: 0 on success, 1 on a configuration error, 2 on an output error
    """
    output_dir = Path(spec.get_output_dir())
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as error:
        logger.error("%s", OutputWriteError(str(output_dir), error.strerror or str(error)).get_message())
        return 2

    arms = spec.arms()
    configs = [config for ehorm in arms for config in spec.configs_for(ehorm)]
    logger.info("Running %d simulations (%s, seeds %s) with %d worker(s)", len(configs),
                ", ".join(config.get_label() for config in configs[::len(spec.get_seeds())]),
                ",".join(str(seed) for seed in spec.get_seeds()), spec.get_workers())
    try:
        results = run_batch(configs, spec.get_workers())
    except InvalidConfigurationError as error:
        logger.error("%s", error.get_message())
        return 1

    seed_count = len(spec.get_seeds())
    by_arm = {ehorm: results[index * seed_count:(index + 1) * seed_count] for index, ehorm in enumerate(arms)}

    try:
        for result in results:
            write_round_csv(result, output_dir / result_filename(result))
        write_summary(build_summary(spec, by_arm), output_dir / SUMMARY_FILE)
        if spec.is_compare():
            write_summary(build_paired_summary(by_arm[False], by_arm[True]), output_dir / PAIRED_SUMMARY_FILE)
    except OutputWriteError as error:
        logger.error("%s", error.get_message())
        return 2

    for arm_results in by_arm.values():
        summary = summarize_batch(arm_results)
        print(f"{summary.get_label()}: {summary.get_runs()} run(s), "
              f"stability mean {summary.get_stability()['mean']:.1f}, "
              f"lifetime mean {summary.get_lifetime()['mean']:.1f}, "
              f"packets mean {summary.get_packets()['mean']:.1f}")
    logger.info("Wrote %d CSV files to %s", len(results), output_dir)
    return 0
