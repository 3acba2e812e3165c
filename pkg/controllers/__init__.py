"""
Controllers package for the sensor network simulator.
"""

from .experiment_config import ExperimentSpec, parse_config
from .experiment_runner import run_experiment, write_round_csv, write_summary

__all__ = ['ExperimentSpec', 'parse_config', 'run_experiment', 'write_round_csv', 'write_summary']
