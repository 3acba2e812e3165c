"""
Command-line entry point for the sensor network simulator.

Runs LEACH, TEEN, SEP or DEEC with or without the E-HORM sleep/awake
overlay over one or more seeds, and writes per-round CSVs and summaries.

Exit codes: 0 success, 1 configuration error, 2 output error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from controllers.experiment_config import parse_config
from controllers.experiment_runner import run_experiment
from models.exceptions import InvalidConfigurationError

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_OUTPUT_ERROR = 2

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Round-based WSN simulator: LEACH, TEEN, SEP and DEEC with optional E-HORM sleep scheduling.",
        epilog="Precedence: flags override the config file, which overrides built-in defaults. "
               "Exit codes: 0 success, 1 configuration error, 2 output error.",
    )
    parser.add_argument("--protocol", choices=["leach", "teen", "sep", "deec"], type=str.lower,
                        help="clustering protocol (default leach)")
    parser.add_argument("--ehorm", choices=["on", "off"], type=str.lower,
                        help="enable the E-HORM sleep/awake overlay (default off)")
    parser.add_argument("--compare", action="store_true", default=None,
                        help="run both arms, E-HORM off and on, on every seed and write a paired summary")
    parser.add_argument("--seeds", help="seed list, e.g. '1,2,3' or '1-30' (default 1)")
    parser.add_argument("--rounds", help="maximum rounds per run (default 10000)")
    parser.add_argument("--nodes", help="number of sensor nodes (default 100)")
    parser.add_argument("--field", help="field size WIDTHxHEIGHT in meters (default 100x100)")
    parser.add_argument("--config", help="flat key=value config file, '#' starts a comment")
    parser.add_argument("--out", help="output directory (default results)")
    return parser


def read_config_file(path: Optional[str]) -> str:
    """Read a config file, empty text when no path is given."""
    if path is None:
        return ""
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except (OSError, UnicodeDecodeError) as error:
        raise InvalidConfigurationError("config", path, f"cannot be read: {error}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {
        "protocol": args.protocol,
        "ehorm": args.ehorm,
        "compare": args.compare,
        "seeds": args.seeds,
        "rounds": args.rounds,
        "nodes": args.nodes,
        "field": args.field,
        "out": args.out,
    }
    try:
        spec = parse_config(read_config_file(args.config), overrides)
    except InvalidConfigurationError as error:
        logging.basicConfig(level=logging.ERROR, stream=sys.stderr)
        logger.error("%s", error.get_message())
        return EXIT_CONFIG_ERROR

    logging.basicConfig(level=getattr(logging, spec.get_log_level()), stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    return run_experiment(spec)


if __name__ == '__main__':
    sys.exit(main())
